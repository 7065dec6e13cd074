"""Brute-force verification in a truncated photon-number basis.

Everything here is built from dense ladder-operator matrices and a
hand-rolled matrix exponential; nothing is borrowed from the 2x2
Bogoliubov shortcuts, so agreement with ``squeeze_algebra`` is a genuine
cross-check.

Truncation keeps |0>, ..., |dim-1>.  Squeezing pushes amplitude toward
high photon numbers, so only matrix elements well below the cutoff are
trustworthy; comparisons are restricted to photon numbers <= ``cutoff``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .correspondence import COORD_SIGNS
from .errors import IllConditionedProjection, InvalidDimension, NonConvergence
from .squeeze_algebra import CompositionResult, SqueezeParam

MAX_TERMS = 200


@dataclass(frozen=True)
class FockOperator:
    dim: int
    m: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.m, dtype=complex)
        if self.dim < 2 or m.shape != (self.dim, self.dim):
            raise InvalidDimension(f"bad operator shape {m.shape} for dim {self.dim}")
        if not np.all(np.isfinite(m)):
            raise ValueError("operator has non-finite entries")
        object.__setattr__(self, "m", m)

    def __matmul__(self, other: "FockOperator") -> "FockOperator":
        return FockOperator(self.dim, self.m @ other.m)

    def dag(self) -> "FockOperator":
        return FockOperator(self.dim, self.m.conj().T)


@dataclass(frozen=True)
class TruncationReport:
    dim: int
    cutoff: int
    residual: float
    branch: str = "principal"

    def __post_init__(self):
        if self.cutoff >= self.dim:
            raise ValueError("cutoff must be below dim")
        if self.residual < 0:
            raise ValueError("residual must be non-negative")


def _check_dim(dim):
    if int(dim) != dim or dim < 2:
        raise InvalidDimension(f"dimension must be an integer >= 2, got {dim}")
    return int(dim)


def default_cutoff(dim: int) -> int:
    return dim // 3


def _check_cutoff(dim: int, cutoff: int | None) -> int:
    # only the lower half of the truncated space is trusted
    cutoff = default_cutoff(dim) if cutoff is None else int(cutoff)
    if not 0 <= cutoff <= dim // 2:
        raise ValueError(f"cutoff {cutoff} outside [0, {dim // 2}] for dim {dim}")
    return cutoff


def build_ladder(dim: int) -> tuple[FockOperator, FockOperator]:
    dim = _check_dim(dim)
    a = np.diag(np.sqrt(np.arange(1, dim, dtype=float)), 1).astype(complex)
    return FockOperator(dim, a), FockOperator(dim, a.conj().T)


def build_k_ops(dim: int) -> tuple[FockOperator, FockOperator, FockOperator]:
    """(K0, K+, K-) = ((a a^dag + a^dag a)/4, a^dag^2/2, a^2/2)."""
    a, ad = build_ladder(dim)
    a, ad = a.m, ad.m
    k0 = (a @ ad + ad @ a) / 4
    return FockOperator(dim, k0), FockOperator(dim, ad @ ad / 2), FockOperator(dim, a @ a / 2)


def hermitian_k_ops(dim: int) -> tuple[FockOperator, FockOperator, FockOperator]:
    """(K0, K1, K2) recovered from K+- = +-i(K1 +- i K2)."""
    k0, kp, km = build_k_ops(dim)
    k1 = (kp.m - km.m) / 2j
    k2 = -(kp.m + km.m) / 2
    return k0, FockOperator(dim, k1), FockOperator(dim, k2)


def commutator(x, y) -> np.ndarray:
    x = x.m if isinstance(x, FockOperator) else x
    y = y.m if isinstance(y, FockOperator) else y
    return x @ y - y @ x


def matrix_exp(op, tol: float = 1e-15, max_terms: int = MAX_TERMS):
    """exp(op) by scaling and squaring with a truncated Taylor series.

    The argument is scaled by 2^-s until its norm is at most 1/2, the
    series is summed until a term's max-norm drops below tol * 2^-s,
    and the result is squared s times.  Accepts a FockOperator or a
    bare square array and returns the same kind.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    wrapped = isinstance(op, FockOperator)
    x = np.asarray(op.m if wrapped else op, dtype=complex)
    n = x.shape[0]
    norm = np.linalg.norm(x, 1) if x.size else 0.0
    s = max(0, math.ceil(math.log2(norm)) + 1) if norm > 0 else 0
    x = x / 2.0**s
    term_tol = tol / 2.0**s

    result = np.eye(n, dtype=complex)
    term = np.eye(n, dtype=complex)
    for k in range(1, max_terms + 1):
        term = term @ x / k
        result = result + term
        if np.max(np.abs(term)) < term_tol:
            break
    else:
        raise NonConvergence(f"Taylor series did not converge in {max_terms} terms")
    for _ in range(s):
        result = result @ result
    return FockOperator(n, result) if wrapped else result


def squeeze_generator(s: SqueezeParam, dim: int) -> np.ndarray:
    beta = s.beta()
    _, kp, km = build_k_ops(dim)
    return beta * kp.m - np.conj(beta) * km.m


def squeeze_unitary(s: SqueezeParam, dim: int, tol: float = 1e-15) -> FockOperator:
    """Truncated S(beta) = exp(beta K+ - beta^* K-)."""
    dim = _check_dim(dim)
    return FockOperator(dim, matrix_exp(squeeze_generator(s, dim), tol))


def rotation_unitary(delta: float, dim: int) -> FockOperator:
    """R(delta) = exp(i K0 delta); diagonal, so exponentiated entrywise."""
    dim = _check_dim(dim)
    n = np.arange(dim)
    return FockOperator(dim, np.diag(np.exp(1j * delta * (2 * n + 1) / 4)))


def unitarity_residual(u: FockOperator) -> float:
    return float(np.max(np.abs(u.m.conj().T @ u.m - np.eye(u.dim))))


def squeezed_vacuum_amplitudes(s: SqueezeParam, n_max: int) -> np.ndarray:
    """Fock amplitudes of S(beta)|0> from the two-term recursion
    c_{2k+2} = c_{2k} e^{i theta} tanh(r) sqrt((2k+1)/(2k+2)), with
    beta = r e^{i theta} and c_0 = 1/sqrt(cosh r).

    Used only to cross-check ``squeeze_unitary``.
    """
    beta = s.beta()
    r = abs(beta)
    ratio = np.exp(1j * np.angle(beta)) * math.tanh(r) if r > 0 else 0.0
    amp = np.zeros(n_max + 1, dtype=complex)
    amp[0] = 1 / math.sqrt(math.cosh(r))
    for k in range(0, n_max - 1, 2):
        amp[k + 2] = amp[k] * ratio * math.sqrt((k + 1) / (k + 2))
    return amp


_BRANCHES = {
    "principal": 0.0,
    "plus_2pi": 2 * math.pi,
    # R(delta + 4 pi) = -R(delta): the metaplectic global sign
    "plus_4pi": 4 * math.pi,
}


def check_composition_identity(s1: SqueezeParam, s2: SqueezeParam,
                               result: CompositionResult, dim: int,
                               cutoff: int | None = None,
                               tol: float = 1e-15) -> TruncationReport:
    """Max |S(b1) S(b2) - S(b3) R(delta)| over photon numbers <= cutoff.

    Each shifted branch of delta is tried and the smallest residual is
    reported together with the branch label.
    """
    dim = _check_dim(dim)
    cutoff = _check_cutoff(dim, cutoff)
    lhs = (squeeze_unitary(s1, dim, tol) @ squeeze_unitary(s2, dim, tol)).m
    s3 = squeeze_unitary(result.beta3, dim, tol).m
    sub = slice(0, cutoff + 1)
    best = None
    for label, shift in _BRANCHES.items():
        rhs = s3 @ rotation_unitary(result.delta + shift, dim).m
        res = float(np.max(np.abs(lhs[sub, sub] - rhs[sub, sub])))
        if best is None or res < best[1]:
            best = (label, res)
    return TruncationReport(dim, cutoff, best[1], best[0])


def adjoint_action_matrix(s: SqueezeParam, dim: int, cutoff: int | None = None,
                          tol: float = 1e-15) -> np.ndarray:
    """3x3 coordinate map of x -> S x S^dag, extracted numerically.

    Each S K_j S^dag is projected onto span(K0, K1, K2) with the trace
    inner product restricted to photon numbers <= cutoff; the coordinate
    signs of x = x0 K0 - x1 K1 - x2 K2 are then applied.
    """
    dim = _check_dim(dim)
    cutoff = _check_cutoff(dim, cutoff)
    u = squeeze_unitary(s, dim, tol).m
    sub = slice(0, cutoff + 1)
    basis = [k.m[sub, sub] for k in hermitian_k_ops(dim)]
    gram = np.array([[np.vdot(bi, bj) for bj in basis] for bi in basis])
    cond = np.linalg.cond(gram)
    if not np.isfinite(cond) or cond > 1e8:
        raise IllConditionedProjection(f"Gram matrix condition number {cond:.3e}")

    ad = np.empty((3, 3))
    for j, kj in enumerate(hermitian_k_ops(dim)):
        img = (u @ kj.m @ u.conj().T)[sub, sub]
        rhs = np.array([np.vdot(bi, img) for bi in basis])
        ad[:, j] = np.linalg.solve(gram, rhs).real
    return COORD_SIGNS[:, None] * ad * COORD_SIGNS[None, :]
