"""
Relativistic velocity addition through squeezes
===============================================

A velocity u in the plane maps to the squeeze (atanh|u|, arg u).
Composing squeezes and mapping back gives u (+) v, and the leftover
phase rotation is the Wigner rotation.
"""

import numpy as np

from squeeze_lorentz import (Velocity2, add_velocities, boost_product_rotation,
                             galilean_limit_check, gamma, gamma_compose,
                             velocity_addition_via_squeeze)

u = Velocity2(0.5, 0.0)
v = Velocity2(0.0, 0.5)

w, delta = velocity_addition_via_squeeze(u, v)
print("via squeezes:", w.array, " delta =", delta)
print("direct law:  ", add_velocities(u, v).array)

# the order matters: v (+) u points elsewhere, with the same speed
print("v (+) u:     ", add_velocities(v, u).array)

# gamma of the sum
print("gamma(w) =", gamma(w), " gamma_u gamma_v (1 + u.v) =", gamma_compose(u, v))

# the spatial picture sees the same rotation with the opposite sign
print("3x3 boost product rotation:", boost_product_rotation(u, v), " = -delta")

# at small speeds the correction to u + v falls off as 1/scale^2
for scale in (10, 100, 1000):
    print(f"  scale {scale:5d}: deviation {galilean_limit_check(u, v, scale):.3e}")

# nearly luminal inputs stay subluminal
fast = Velocity2(1 - 1e-6, 0.0)
print("perpendicular:", add_velocities(fast, Velocity2(0.0, 1 - 1e-6)).speed)
print("collinear inside the disk:", np.hypot(*add_velocities(fast, fast).array) < 1)
