"""
Composing two squeezes
======================

Two single-mode squeezes in different directions multiply to a third
squeeze followed by a phase rotation R(delta).
"""

import math

import numpy as np

from squeeze_lorentz import (SqueezeParam, compose, compose_squeezes_closed_form,
                             polar_decompose, to_bogoliubov)

s1 = SqueezeParam(1.0, 0.0)
s2 = SqueezeParam(1.0, math.pi / 2)

# closed form
res = compose_squeezes_closed_form(s1, s2)
print(f"rho3 = {res.beta3.rho:.12f}  phi3 = {res.beta3.phi:.12f}  delta = {res.delta:.12f}")

# the same numbers from the 2x2 Bogoliubov matrices: S1 S2 acts as M2 @ M1
m = compose(to_bogoliubov(s1), to_bogoliubov(s2))
print("SU(1,1) invariant |mu|^2 - |nu|^2 =", abs(m.mu) ** 2 - abs(m.nu) ** 2)
polar = polar_decompose(m)
print(f"polar route: rho3 = {polar.beta3.rho:.12f}  delta = {polar.delta:.12f}")

# collinear squeezes just add and leave no rotation
col = compose_squeezes_closed_form(SqueezeParam(0.4, 0.3), SqueezeParam(0.7, 0.3))
print("collinear:", col.beta3.rho, col.delta)

# the rotation angle over a sweep of relative directions
for dphi in np.linspace(0, math.pi, 7):
    d = compose_squeezes_closed_form(s1, SqueezeParam(1.0, dphi)).delta
    print(f"  phi2 - phi1 = {dphi:5.3f}   delta = {d:+.6f}")
