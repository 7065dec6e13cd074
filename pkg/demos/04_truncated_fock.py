"""
Checking the composition law in a truncated Fock space
======================================================

S(b1) S(b2) = S(b3) R(delta) is checked on the low photon-number block.
Truncation spoils the top of the space, so the residual shrinks as the
dimension grows with the cutoff fixed.
"""

import math

from squeeze_lorentz import (SqueezeParam, check_composition_identity,
                             compose_squeezes_closed_form, squeeze_unitary,
                             unitarity_residual)

s1, s2 = SqueezeParam(1.0, 0.0), SqueezeParam(1.0, 2.0)
res = compose_squeezes_closed_form(s1, s2)

for dim in (40, 60, 80, 100):
    rep = check_composition_identity(s1, s2, res, dim, cutoff=13)
    print(f"dim {dim:3d}: residual {rep.residual:.2e} ({rep.branch})")

# a wrong rotation angle is caught at once
bad = check_composition_identity(s1, s2, type(res)(res.beta3, -res.delta), 80, cutoff=13)
print("with -delta:", bad.residual)

# the truncated exponential stays unitary
print("unitarity:", unitarity_residual(squeeze_unitary(SqueezeParam(1.5, math.pi / 3), 60)))
