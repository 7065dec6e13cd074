"""
Squeezes act on the generators as Lorentz boosts
================================================

Conjugating (K0, K1, K2) by a squeeze mixes them like (t, x, y) under a
boost with rapidity rho in direction phi.  We compare the closed form,
the textbook boost, and a numerical extraction in a truncated Fock space.
"""

import numpy as np

from squeeze_lorentz import (METRIC, SqueezeParam, adjoint_action_matrix,
                             adjoint_boost_from_squeeze, boost_matrix_rapidity)

s = SqueezeParam(0.6, 1.1)
closed = adjoint_boost_from_squeeze(s).m
textbook = boost_matrix_rapidity(s.rho, s.phi).m
np.set_printoptions(precision=6, suppress=True)
print(closed)
print("closed form vs textbook boost:", np.max(np.abs(closed - textbook)))

# the same matrix from S K_i S^dag, projected back onto the generators
for dim in (40, 60, 80):
    ext = adjoint_action_matrix(s, dim, cutoff=20)
    print(f"dim {dim}: extraction error {np.max(np.abs(ext - closed)):.2e}")

# the Minkowski metric is preserved
print("m^T G m - G:", np.max(np.abs(closed.T @ METRIC @ closed - METRIC)))
