"""Dictionary between squeeze parameters and (2+1)-dimensional kinematics.

A squeeze (rho, phi) corresponds to the velocity tanh(rho) (cos phi, sin phi),
and conjugation x -> S x S^dag of x = x0 K0 - x1 K1 - x2 K2 is the Lorentz
boost with that velocity.  Composing two squeezes in the order S(b_u) S(b_v)
reproduces u (+) v: the first (leftmost) squeeze carries the velocity of the
intermediate frame.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import relativity as rel
from .relativity import Boost3, Velocity2
from .squeeze_algebra import SqueezeParam, compose_squeezes_closed_form

# x = x0 K0 - x1 K1 - x2 K2: coordinate signs relative to the generator basis
COORD_SIGNS = np.array([1.0, -1.0, -1.0])


@dataclass(frozen=True)
class MinkowskiVector:
    x0: float
    x1: float
    x2: float

    def __post_init__(self):
        for name in ("x0", "x1", "x2"):
            val = float(getattr(self, name))
            if not math.isfinite(val):
                raise ValueError(f"{name} must be finite")
            object.__setattr__(self, name, val)

    @property
    def array(self) -> np.ndarray:
        return np.array([self.x0, self.x1, self.x2])

    def interval(self) -> float:
        return self.x0**2 - self.x1**2 - self.x2**2


@dataclass(frozen=True)
class CorrespondencePair:
    squeeze: SqueezeParam
    velocity: Velocity2

    @classmethod
    def from_squeeze(cls, s: SqueezeParam) -> "CorrespondencePair":
        return cls(s, squeeze_to_velocity(s))

    @classmethod
    def from_velocity(cls, v: Velocity2) -> "CorrespondencePair":
        return cls(velocity_to_squeeze(v), v)


def squeeze_to_velocity(s: SqueezeParam) -> Velocity2:
    speed = math.tanh(s.rho)
    return Velocity2(speed * math.cos(s.phi), speed * math.sin(s.phi))


def velocity_to_squeeze(v: Velocity2) -> SqueezeParam:
    speed = v.speed
    if speed == 0.0:
        return SqueezeParam(0.0, 0.0)
    return SqueezeParam(math.atanh(speed), math.atan2(v.vy, v.vx))


def adjoint_generator_matrix(s: SqueezeParam) -> np.ndarray:
    """Coefficients of S K_j S^dag in the basis (K0, K1, K2), column j.

    Closed form obtained by summing the nested-commutator series; the
    matrix is symmetric with first column (cosh rho, cos phi sinh rho,
    sin phi sinh rho).
    """
    ch, sh = math.cosh(s.rho), math.sinh(s.rho)
    c, sn = math.cos(s.phi), math.sin(s.phi)
    return np.array([
        [ch, c * sh, sn * sh],
        [c * sh, 1 + (ch - 1) * c * c, (ch - 1) * c * sn],
        [sn * sh, (ch - 1) * c * sn, 1 + (ch - 1) * sn * sn],
    ])


def adjoint_boost_from_squeeze(s: SqueezeParam) -> Boost3:
    """Coordinate map (x0, x1, x2) -> (y0, y1, y2) induced by x -> S x S^dag."""
    ad = adjoint_generator_matrix(s)
    return Boost3(COORD_SIGNS[:, None] * ad * COORD_SIGNS[None, :])


def transform_event(s: SqueezeParam, x: MinkowskiVector) -> MinkowskiVector:
    y = adjoint_boost_from_squeeze(s).m @ x.array
    return MinkowskiVector(*y)


def velocity_addition_via_squeeze(u: Velocity2, v: Velocity2) -> tuple[Velocity2, float]:
    """u (+) v computed by composing S(b_u) S(b_v) = S(b_w) R(delta).

    Returns the composite velocity and the Wigner angle delta of the
    optical rotation R(delta) = exp(i K0 delta).
    """
    res = compose_squeezes_closed_form(velocity_to_squeeze(u), velocity_to_squeeze(v))
    return squeeze_to_velocity(res.beta3), res.delta


def boost_product_rotation(u: Velocity2, v: Velocity2) -> float:
    """Spatial rotation angle left over in boost(u) @ boost(v).

    Equals minus the optical Wigner angle: R(delta) conjugates (K1, K2)
    by a rotation through -delta.
    """
    m = rel.boost_matrix_velocity(u).m @ rel.boost_matrix_velocity(v).m
    return rel.boost_polar_decompose(m).angle
