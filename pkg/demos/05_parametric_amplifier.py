"""
Reading the rotation off an interference fringe
===============================================

Beam 1 passes through one two-mode squeezer, beam 2 through two.  The
phase of their overlap is delta / 2, so the fringe maximum sits at
delta / 2 and doubling it recovers the rotation angle.
"""

import math

import numpy as np

from squeeze_lorentz import (SqueezeParam, compose_squeezes_closed_form,
                             fringe_intensity, fringe_peak, nopa_pipeline,
                             prepare_beams)

s1, s2 = SqueezeParam(0.6, 0.0), SqueezeParam(0.6, math.pi / 2)
dim = 20

res = nopa_pipeline(s1, s2, dim)
print("measured delta' =", res.delta_prime)
print("predicted delta =", compose_squeezes_closed_form(s1, s2).delta)
print("visibility      =", res.visibility)

psi1, psi2, _ = prepare_beams(s1, s2, dim)
phases = np.linspace(-math.pi, math.pi, 72, endpoint=False)
ints = fringe_intensity(psi1, psi2, phases)
print("fringe peak at", fringe_peak(phases, ints), "rad (delta / 2)")
for theta, i in list(zip(phases, ints))[::9]:
    print(f"  {theta:+.3f}  {'#' * int(40 * i)}")
