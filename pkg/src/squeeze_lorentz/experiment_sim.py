"""Ideal two-mode interference test of the composition law.

Beam 1 is prepared as S2(b1) S2(b2)|00> and beam 2 as S2(b3)|00>, where
S2 is the two-mode squeeze and b3 the composite squeeze.  Since
S2(b1) S2(b2) = S2(b3) R2(delta) and R2(delta) = exp(i K0 delta) with
K0 = (n1 + n2 + 1)/2 multiplies |00> by exp(i delta/2), the overlap
<psi2|psi1> has phase delta/2.  The reported fringe phase is twice that
so it compares directly with the Wigner angle.

Generators are K+ = a1^dag a2^dag, K- = a1 a2, K0 = (n1 + n2 + 1)/2,
which close on the same commutators as the one-mode realisation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import sparse
from scipy.sparse.linalg import expm_multiply

from .fock_oracle import build_ladder, matrix_exp
from .squeeze_algebra import SqueezeParam, compose_squeezes_closed_form


@dataclass(frozen=True)
class TwoModeState:
    dim: int
    amp: np.ndarray

    def __post_init__(self):
        amp = np.asarray(self.amp, dtype=complex)
        if amp.shape != (self.dim * self.dim,):
            raise ValueError(f"expected {self.dim ** 2} amplitudes, got {amp.shape}")
        object.__setattr__(self, "amp", amp)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amp))

    def grid(self) -> np.ndarray:
        """Amplitudes reshaped to [n1, n2]."""
        return self.amp.reshape(self.dim, self.dim)


@dataclass(frozen=True)
class FringeResult:
    delta_prime: float
    visibility: float
    overlap_magnitude: float


def two_mode_ops(dim: int):
    """Ladder operators (a1, a2) on the dim^2 product space, index n1*dim + n2."""
    a, _ = build_ladder(dim)
    eye = np.eye(dim)
    return np.kron(a.m, eye), np.kron(eye, a.m)


def two_mode_k_ops(dim: int):
    """(K0, K+, K-) of the two-mode realisation."""
    a1, a2 = two_mode_ops(dim)
    kp = a1.conj().T @ a2.conj().T
    km = a1 @ a2
    n_tot = a1.conj().T @ a1 + a2.conj().T @ a2
    k0 = (n_tot + np.eye(dim * dim)) / 2
    return k0, kp, km


def two_mode_squeeze_unitary(s: SqueezeParam, dim: int, tol: float = 1e-15) -> np.ndarray:
    """exp(beta a1^dag a2^dag - beta^* a1 a2) on the truncated product space."""
    beta = s.beta()
    _, kp, km = two_mode_k_ops(dim)
    return matrix_exp(beta * kp - np.conj(beta) * km, tol)


def _sparse_generator(s: SqueezeParam, dim: int):
    a = sparse.diags(np.sqrt(np.arange(1, dim, dtype=float)), 1, format="csr")
    km = sparse.kron(a, a, format="csr")
    beta = s.beta()
    return (beta * km.T - np.conj(beta) * km).tocsr()


def apply_two_mode_squeeze(s: SqueezeParam, state: TwoModeState) -> TwoModeState:
    """S2(beta)|state>, without forming the dim^2 x dim^2 unitary."""
    if s.rho == 0:
        return state
    amp = expm_multiply(_sparse_generator(s, state.dim), state.amp)
    return TwoModeState(state.dim, amp)


def vacuum(dim: int) -> TwoModeState:
    amp = np.zeros(dim * dim, dtype=complex)
    amp[0] = 1.0
    return TwoModeState(dim, amp)


def prepare_beams(s1: SqueezeParam, s2: SqueezeParam, dim: int):
    """Return (beam 1, beam 2, composite result)."""
    res = compose_squeezes_closed_form(s1, s2)
    vac = vacuum(dim)
    psi1 = apply_two_mode_squeeze(s1, apply_two_mode_squeeze(s2, vac))
    psi2 = apply_two_mode_squeeze(res.beta3, vac)
    return psi1, psi2, res


def nopa_pipeline(s1: SqueezeParam, s2: SqueezeParam, dim: int) -> FringeResult:
    psi1, psi2, _ = prepare_beams(s1, s2, dim)
    overlap = np.vdot(psi2.amp, psi1.amp)
    n1, n2 = psi1.norm(), psi2.norm()
    # contrast of |psi1 + e^{i theta} psi2|^2 over theta
    visibility = 2 * abs(overlap) / (n1 * n1 + n2 * n2)
    return FringeResult(
        delta_prime=2.0 * math.atan2(overlap.imag, overlap.real),
        visibility=float(visibility),
        overlap_magnitude=float(abs(overlap) / (n1 * n2)),
    )


def fringe_intensity(psi1: TwoModeState, psi2: TwoModeState, phases) -> np.ndarray:
    """I(theta) = |psi1 + e^{i theta} psi2|^2 / 4 for each theta.

    The bright fringe sits at theta = arg<psi2|psi1>, i.e. delta' / 2.
    """
    phases = np.asarray(phases, dtype=float)
    if phases.size == 0:
        raise ValueError("phases must be non-empty")
    n1 = np.vdot(psi1.amp, psi1.amp).real
    n2 = np.vdot(psi2.amp, psi2.amp).real
    cross = np.vdot(psi1.amp, psi2.amp)
    return (n1 + n2 + 2 * np.real(np.exp(1j * phases) * cross)) / 4


def fringe_scan(s1: SqueezeParam, s2: SqueezeParam, dim: int, phases) -> np.ndarray:
    psi1, psi2, _ = prepare_beams(s1, s2, dim)
    return fringe_intensity(psi1, psi2, phases)


def fringe_peak(phases, intensities) -> float:
    """Location of the brightest fringe, refined by a parabola through the
    maximum sample and its neighbours (periodic in 2 pi)."""
    phases = np.asarray(phases, dtype=float)
    ints = np.asarray(intensities, dtype=float)
    k = int(np.argmax(ints))
    n = len(ints)
    if n < 3:
        return float(phases[k])
    y0, y1, y2 = ints[(k - 1) % n], ints[k], ints[(k + 1) % n]
    curv = y0 - 2 * y1 + y2
    offset = 0.0 if curv == 0 else 0.5 * (y0 - y2) / curv
    step = phases[1] - phases[0]
    return float(math.remainder(phases[k] + offset * step, 2 * math.pi))


def scan_visibility(intensities) -> float:
    ints = np.asarray(intensities, dtype=float)
    return float((ints.max() - ints.min()) / (ints.max() + ints.min()))
