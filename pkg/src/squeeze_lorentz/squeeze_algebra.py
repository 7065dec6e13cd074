"""Exact 2x2 Bogoliubov representation of squeeze and rotation operators.

A squeeze S(beta) = exp(beta a^dag^2/2 - beta^* a^2/2) acts on the ladder
operators by conjugation,

    S a S^dag     = mu a + nu a^dag
    S a^dag S^dag = nu^* a + mu^* a^dag

so it is captured by the SU(1,1) matrix [[mu, nu], [nu^*, mu^*]].  The
squeeze amplitude is parametrised as beta = (rho/2) exp(i(pi/2 - phi)),
which makes rho the rapidity and phi the direction of the matching
(2+1)-dimensional Lorentz boost.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

SU11_TOL = 1e-12
DEGENERATE_NU = 1e-14


def wrap_angle(x: float) -> float:
    """Map an angle onto (-pi, pi]."""
    y = math.remainder(x, 2.0 * math.pi)
    if y <= -math.pi:
        y += 2.0 * math.pi
    return y


@dataclass(frozen=True)
class SqueezeParam:
    rho: float
    phi: float = 0.0

    def __post_init__(self):
        rho = float(self.rho)
        phi = float(self.phi)
        if not (math.isfinite(rho) and math.isfinite(phi)):
            raise ValueError(f"non-finite squeeze parameter ({rho}, {phi})")
        if rho < 0.0:
            raise ValueError(f"rho must be non-negative, got {rho}")
        # direction is meaningless at zero squeeze
        phi = 0.0 if rho == 0.0 else wrap_angle(phi)
        object.__setattr__(self, "rho", rho)
        object.__setattr__(self, "phi", phi)

    def beta(self) -> complex:
        return 0.5 * self.rho * complex(math.sin(self.phi), math.cos(self.phi))


@dataclass(frozen=True)
class BogoliubovMatrix:
    mu: complex
    nu: complex

    def __post_init__(self):
        object.__setattr__(self, "mu", complex(self.mu))
        object.__setattr__(self, "nu", complex(self.nu))

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.mu, self.nu],
                         [self.nu.conjugate(), self.mu.conjugate()]])

    def su11_residual(self) -> float:
        return abs(abs(self.mu) ** 2 - abs(self.nu) ** 2 - 1.0)


@dataclass(frozen=True)
class CompositionResult:
    """Squeeze times rotation, S(beta3) R(delta).

    ``degenerate`` flags a (numerically) pure rotation, where the squeeze
    direction is undefined and reported as 0.
    """
    beta3: SqueezeParam
    delta: float
    degenerate: bool = False


IDENTITY = BogoliubovMatrix(1.0, 0.0)


def to_bogoliubov(s: SqueezeParam) -> BogoliubovMatrix:
    half = 0.5 * s.rho
    phase = complex(math.sin(s.phi), math.cos(s.phi))  # e^{i(pi/2 - phi)}
    return BogoliubovMatrix(math.cosh(half), -phase * math.sinh(half))


def rotation_bogoliubov(delta: float) -> BogoliubovMatrix:
    """R(delta) = exp(i K0 delta) sends a to a exp(-i delta/2)."""
    if not math.isfinite(delta):
        raise ValueError("delta must be finite")
    return BogoliubovMatrix(complex(math.cos(delta / 2), -math.sin(delta / 2)), 0.0)


def compose(first: BogoliubovMatrix, second: BogoliubovMatrix) -> BogoliubovMatrix:
    """Bogoliubov matrix of the operator product S_first S_second.

    Conjugating a by S_1 S_2 applies S_2's substitution first and then
    rewrites the resulting a, a^dag through S_1, so the coefficient
    matrices multiply in the reverse order: M(S_1 S_2) = M_2 @ M_1.
    With this order the a-coefficient of S(b1) S(b2) is
    cosh(r1/2) cosh(r2/2) + exp(i(phi1 - phi2)) sinh(r1/2) sinh(r2/2).
    """
    mu = second.mu * first.mu + second.nu * first.nu.conjugate()
    nu = second.mu * first.nu + second.nu * first.mu.conjugate()
    return BogoliubovMatrix(mu, nu)


def polar_decompose(m: BogoliubovMatrix) -> CompositionResult:
    """Split ``m`` into S(beta3) R(delta) with delta on the principal branch.

    rho3 is taken from |nu| = sinh(rho3/2) rather than |mu| = cosh(rho3/2);
    the two agree analytically but acosh loses half the digits near 1.
    """
    delta = -2.0 * math.atan2(m.mu.imag, m.mu.real)
    if delta <= -math.pi:
        delta += 2.0 * math.pi
    if abs(m.nu) < DEGENERATE_NU:
        return CompositionResult(SqueezeParam(0.0, 0.0), delta, degenerate=True)
    rho3 = 2.0 * math.asinh(abs(m.nu))
    w = -m.nu * complex(math.cos(delta / 2), math.sin(delta / 2))
    phi3 = math.pi / 2 - math.atan2(w.imag, w.real)
    return CompositionResult(SqueezeParam(rho3, phi3), delta)


def compose_squeezes_closed_form(s1: SqueezeParam, s2: SqueezeParam) -> CompositionResult:
    """Closed-form S(beta1) S(beta2) = S(beta3) R(delta).

    Matching the a and a^dag coefficients of both sides gives

        cosh(r3/2) e^{-i delta/2}        = c1 c2 + e^{-i(phi2-phi1)} s1 s2
        sinh(r3/2) e^{i(phi3 + delta/2)} = e^{i phi1} s1 c2 + e^{i phi2} s2 c1

    with c_k = cosh(r_k/2), s_k = sinh(r_k/2).  The Wigner angle uses
    sin(phi2 - phi1) in the numerator; the direction (cos phi3, sin phi3)
    comes from the 2x2 linear system obtained by expanding
    phi3 + delta/2 and solving by Cramer's rule.
    """
    c1, sh1 = math.cosh(s1.rho / 2), math.sinh(s1.rho / 2)
    c2, sh2 = math.cosh(s2.rho / 2), math.sinh(s2.rho / 2)
    dphi = s2.phi - s1.phi

    # tan(delta/2): denominator c1 c2 + cos(dphi) s1 s2 >= 1, so delta in (-pi, pi)
    num = math.sin(dphi) * sh1 * sh2
    den = c1 * c2 + math.cos(dphi) * sh1 * sh2
    delta = 2.0 * math.atan2(num, den)

    e = math.cos(s1.phi) * sh1 * c2 + math.cos(s2.phi) * sh2 * c1
    f = math.sin(s1.phi) * sh1 * c2 + math.sin(s2.phi) * sh2 * c1
    half_sinh3 = math.hypot(e, f)
    if half_sinh3 < DEGENERATE_NU:
        return CompositionResult(SqueezeParam(0.0, 0.0), delta, degenerate=True)
    rho3 = 2.0 * math.asinh(half_sinh3)

    t3 = math.tanh(rho3 / 2)
    a = t3 * num
    b = t3 * den
    # [[b, -a], [a, b]] @ (cos phi3, sin phi3) = (e, f)
    det = b * b + a * a
    cos3 = (e * b + a * f) / det
    sin3 = (b * f - a * e) / det
    phi3 = math.atan2(sin3, cos3)
    return CompositionResult(SqueezeParam(rho3, phi3), delta)


def cosh_rho3(s1: SqueezeParam, s2: SqueezeParam) -> float:
    """cosh of the composite rapidity, cosh r1 cosh r2 + cos(phi2 - phi1) sinh r1 sinh r2."""
    return (math.cosh(s1.rho) * math.cosh(s2.rho)
            + math.cos(s2.phi - s1.phi) * math.sinh(s1.rho) * math.sinh(s2.rho))


def composite_direction(s1: SqueezeParam, s2: SqueezeParam) -> tuple[float, float]:
    """Unit direction of the composite boost written in full rapidities.

    w_hat = ([sinh r1 cosh r2 + sinh r2 (cosh r1 - 1) u.v] u_hat + sinh r2 v_hat) / sinh r3
    """
    u = np.array([math.cos(s1.phi), math.sin(s1.phi)])
    v = np.array([math.cos(s2.phi), math.sin(s2.phi)])
    sr1, cr1 = math.sinh(s1.rho), math.cosh(s1.rho)
    sr2, cr2 = math.sinh(s2.rho), math.cosh(s2.rho)
    vec = (sr1 * cr2 + sr2 * (cr1 - 1.0) * float(u @ v)) * u + sr2 * v
    sr3 = math.sqrt(max(cosh_rho3(s1, s2) ** 2 - 1.0, 0.0))
    return float(vec[0] / sr3), float(vec[1] / sr3)
