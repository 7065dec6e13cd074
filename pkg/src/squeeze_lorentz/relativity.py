"""(2+1)-dimensional special-relativity kinematics in units where c = 1.

Boost matrices act on column vectors (x0, x1, x2) and map event
coordinates in a frame to those in a frame moving with velocity v.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotLorentz, SuperluminalInput

METRIC = np.diag([1.0, -1.0, -1.0])
# |v|^2 must stay below 1 - GUARD; keeps gamma finite
GUARD = 1e-13


@dataclass(frozen=True)
class Velocity2:
    vx: float
    vy: float

    def __post_init__(self):
        vx, vy = float(self.vx), float(self.vy)
        if not (math.isfinite(vx) and math.isfinite(vy)):
            raise SuperluminalInput(f"non-finite velocity ({vx}, {vy})")
        if vx * vx + vy * vy >= 1.0 - GUARD:
            raise SuperluminalInput(f"|v| = {math.hypot(vx, vy)!r} is not subluminal")
        object.__setattr__(self, "vx", vx)
        object.__setattr__(self, "vy", vy)

    @classmethod
    def from_array(cls, arr) -> "Velocity2":
        x, y = np.asarray(arr, dtype=float)
        return cls(x, y)

    @property
    def array(self) -> np.ndarray:
        return np.array([self.vx, self.vy])

    @property
    def speed(self) -> float:
        return math.hypot(self.vx, self.vy)

    def dot(self, other: "Velocity2") -> float:
        return self.vx * other.vx + self.vy * other.vy


@dataclass(frozen=True)
class Boost3:
    m: np.ndarray

    def __post_init__(self):
        m = np.array(self.m, dtype=float)
        if m.shape != (3, 3):
            raise ValueError(f"expected a 3x3 matrix, got shape {m.shape}")
        m.setflags(write=False)
        object.__setattr__(self, "m", m)

    def metric_residual(self) -> float:
        return metric_residual(self.m)

    def symmetry_residual(self) -> float:
        return float(np.max(np.abs(self.m - self.m.T)))


@dataclass(frozen=True)
class BoostDecomposition:
    boost: Boost3
    angle: float


def metric_residual(m: np.ndarray) -> float:
    """Max-norm of m^T G m - G."""
    m = np.asarray(m, dtype=float)
    return float(np.max(np.abs(m.T @ METRIC @ m - METRIC)))


def rotation_matrix(angle: float) -> np.ndarray:
    """Spatial rotation embedded in the 1 (+) 2 block."""
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[1.0, 0.0, 0.0],
                     [0.0, c, -s],
                     [0.0, s, c]])


def gamma(v: Velocity2) -> float:
    return 1.0 / math.sqrt(1.0 - (v.vx * v.vx + v.vy * v.vy))


def boost_matrix_velocity(v: Velocity2) -> Boost3:
    speed = v.speed
    if speed == 0.0:
        return Boost3(np.eye(3))
    g = gamma(v)
    n = v.array / speed
    m = np.empty((3, 3))
    m[0, 0] = g
    m[0, 1:] = m[1:, 0] = -speed * g * n
    # eta^2 gamma^2 / (1 + gamma) is exact for the spatial block
    m[1:, 1:] = np.eye(2) + speed**2 * g**2 / (1.0 + g) * np.outer(n, n)
    return Boost3(m)


def boost_matrix_rapidity(rho: float, phi: float) -> Boost3:
    if rho < 0:
        raise ValueError(f"rapidity must be non-negative, got {rho}")
    ch, sh = math.cosh(rho), math.sinh(rho)
    c, s = math.cos(phi), math.sin(phi)
    return Boost3(np.array([
        [ch, -sh * c, -sh * s],
        [-sh * c, 1 + (ch - 1) * c * c, (ch - 1) * c * s],
        [-sh * s, (ch - 1) * c * s, 1 + (ch - 1) * s * s],
    ]))


def add_velocities(u: Velocity2, v: Velocity2) -> Velocity2:
    """Relativistic sum u (+) v: velocity of frame 2 seen from frame 0 when
    frame 1 moves with u relative to 0 and frame 2 with v relative to 1."""
    gu = gamma(u)
    uv = u.dot(v)
    w = (u.array + v.array / gu + gu / (1.0 + gu) * uv * u.array) / (1.0 + uv)
    return Velocity2.from_array(w)


def gamma_compose(u: Velocity2, v: Velocity2) -> float:
    return gamma(u) * gamma(v) * (1.0 + u.dot(v))


def boost_polar_decompose(m, tol: float = 1e-8) -> BoostDecomposition:
    """Factor a proper orthochronous Lorentz matrix as boost @ rotation.

    The time axis maps to the first column, which a spatial rotation
    leaves alone, so the boost is read off that column and the rotation
    is what remains after undoing it.
    """
    m = np.asarray(m, dtype=float)
    res = metric_residual(m)
    if res > tol:
        raise NotLorentz("metric preservation m^T G m = G", res)
    if m[0, 0] < 1.0 - tol:
        raise NotLorentz("orthochronous m[0][0] >= 1", 1.0 - m[0, 0])
    det = float(np.linalg.det(m))
    if abs(det - 1.0) > tol:
        raise NotLorentz("det m = +1", abs(det - 1.0))

    v = -m[1:, 0] / m[0, 0]
    boost = boost_matrix_velocity(Velocity2.from_array(v))
    # inverse of a pure boost is G B G
    rot = METRIC @ boost.m @ METRIC @ m
    angle = math.atan2(rot[2, 1] - rot[1, 2], rot[1, 1] + rot[2, 2])
    return BoostDecomposition(boost, angle)


def galilean_limit_check(u, v, scale: float) -> float:
    """Distance between scale * ((u/scale) (+) (v/scale)) and u + v.

    ``u`` and ``v`` may be Velocity2 or plain 2-vectors; only the rescaled
    vectors need to be subluminal.  Raising ``scale`` plays the role of
    sending c to infinity.
    """
    if scale < 1.0:
        raise ValueError(f"scale must be >= 1, got {scale}")
    u = u.array if isinstance(u, Velocity2) else np.asarray(u, dtype=float)
    v = v.array if isinstance(v, Velocity2) else np.asarray(v, dtype=float)
    w = add_velocities(Velocity2.from_array(u / scale), Velocity2.from_array(v / scale))
    return float(np.linalg.norm(w.array * scale - (u + v)))
