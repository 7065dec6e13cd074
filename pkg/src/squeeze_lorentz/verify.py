"""Seeded oracle suites: every closed form against an independent route.

Each check yields a record {name, residual, tolerance, passed}.  Fock
checks draw squeeze magnitudes up to FOCK_RHO_MAX, the range over which
the default truncation (cutoff = dim // 3) is reliable at dim >= 60.
"""
from __future__ import annotations

import math

import numpy as np

from . import correspondence as cor
from . import fock_oracle as fo
from . import relativity as rel
from . import squeeze_algebra as sa

TOLERANCES = {
    "ladder_commutator": 1e-12,
    "weight_commutators": 1e-12,
    "hermitian_commutators": 1e-12,
    "su11_invariant": 1e-12,
    "bogoliubov_vs_fock": 1e-6,
    "unitarity": 1e-8,
    "closed_form_vs_polar": 1e-10,
    "fock_composition": 1e-6,
    "metric_preservation": 1e-10,
    "rapidity_vs_velocity": 1e-12,
    "adjoint_vs_rapidity": 1e-12,
    "fock_adjoint": 1e-5,
    "dictionary": 1e-10,
    "gamma_composition": 1e-12,
    "wigner_3x3": 1e-10,
}

FOCK_RHO_MAX = 0.5
N_RANDOM = 1000
N_FOCK = 5


def angle_diff(a: float, b: float) -> float:
    """|a - b| modulo 2 pi."""
    return abs(math.remainder(a - b, 2 * math.pi))


def random_squeeze(rng, rho_max: float) -> sa.SqueezeParam:
    return sa.SqueezeParam(rng.uniform(0, rho_max), rng.uniform(-math.pi, math.pi))


def random_velocity(rng, speed_max: float = 0.99) -> rel.Velocity2:
    speed = speed_max * math.sqrt(rng.uniform())
    ang = rng.uniform(-math.pi, math.pi)
    return rel.Velocity2(speed * math.cos(ang), speed * math.sin(ang))


def safe_block(x: np.ndarray, top: int) -> np.ndarray:
    return x[:top, :top]


def composition_mismatch(s1, s2) -> float:
    """Worst disagreement between the closed form and the 2x2 polar route."""
    closed = sa.compose_squeezes_closed_form(s1, s2)
    polar = sa.polar_decompose(sa.compose(sa.to_bogoliubov(s1), sa.to_bogoliubov(s2)))
    return max(abs(closed.beta3.rho - polar.beta3.rho),
               angle_diff(closed.beta3.phi, polar.beta3.phi),
               angle_diff(closed.delta, polar.delta))


def wigner_3x3_mismatch(u: rel.Velocity2, v: rel.Velocity2) -> float:
    """| |3x3 rotation angle| - |optical delta| |, plus the sign check angle = -delta."""
    _, delta = cor.velocity_addition_via_squeeze(u, v)
    angle = cor.boost_product_rotation(u, v)
    return max(abs(abs(angle) - abs(delta)), angle_diff(angle, -delta))


def _check(name, residual, overrides):
    tol = overrides.get(name, TOLERANCES[name])
    residual = float(residual)
    return {"name": name, "residual": residual, "tolerance": tol,
            "passed": bool(residual <= tol)}


def algebra_checks(dim, rng, overrides):
    out = []
    a, ad = fo.build_ladder(dim)
    comm = fo.commutator(a, ad) - np.eye(dim)
    out.append(_check("ladder_commutator", np.max(np.abs(comm[:dim - 1, :dim - 1])), overrides))

    top = dim - 2
    k0, kp, km = fo.build_k_ops(dim)
    weight = max(
        np.max(np.abs(safe_block(fo.commutator(k0, kp) - kp.m, top))),
        np.max(np.abs(safe_block(fo.commutator(k0, km) + km.m, top))),
        np.max(np.abs(safe_block(fo.commutator(kp, km) + 2 * k0.m, top))),
    )
    out.append(_check("weight_commutators", weight, overrides))

    h0, h1, h2 = fo.hermitian_k_ops(dim)
    herm = max(
        np.max(np.abs(safe_block(fo.commutator(h1, h2) + 1j * h0.m, top))),
        np.max(np.abs(safe_block(fo.commutator(h0, h1) - 1j * h2.m, top))),
        np.max(np.abs(safe_block(fo.commutator(h0, h2) + 1j * h1.m, top))),
    )
    out.append(_check("hermitian_commutators", herm, overrides))

    su11 = 0.0
    for _ in range(N_RANDOM):
        m = sa.compose(sa.to_bogoliubov(random_squeeze(rng, 3.0)),
                       sa.to_bogoliubov(random_squeeze(rng, 3.0)))
        su11 = max(su11, m.su11_residual() / (abs(m.mu) ** 2))
    out.append(_check("su11_invariant", su11, overrides))

    bog, unit = 0.0, 0.0
    low = dim // 6 + 1
    for _ in range(N_FOCK):
        s = random_squeeze(rng, FOCK_RHO_MAX)
        u = fo.squeeze_unitary(s, dim)
        unit = max(unit, fo.unitarity_residual(u))
        m = sa.to_bogoliubov(s)
        conj = u.m @ a.m @ u.m.conj().T
        pred = m.mu * a.m + m.nu * ad.m
        bog = max(bog, np.max(np.abs(safe_block(conj - pred, low))))
    out.append(_check("bogoliubov_vs_fock", bog, overrides))
    out.append(_check("unitarity", unit, overrides))
    return out


def composition_checks(dim, rng, overrides):
    worst = 0.0
    for _ in range(N_RANDOM):
        worst = max(worst, composition_mismatch(random_squeeze(rng, 3.0),
                                                random_squeeze(rng, 3.0)))
    out = [_check("closed_form_vs_polar", worst, overrides)]

    fock = 0.0
    for _ in range(N_FOCK):
        s1, s2 = random_squeeze(rng, FOCK_RHO_MAX), random_squeeze(rng, FOCK_RHO_MAX)
        res = sa.compose_squeezes_closed_form(s1, s2)
        fock = max(fock, fo.check_composition_identity(s1, s2, res, dim).residual)
    out.append(_check("fock_composition", fock, overrides))
    return out


def boost_checks(dim, rng, overrides):
    metric = par = adj = dic = gam = wig = 0.0
    for _ in range(N_RANDOM):
        u, v = random_velocity(rng), random_velocity(rng)
        bu, bv = rel.boost_matrix_velocity(u), rel.boost_matrix_velocity(v)
        w = rel.add_velocities(u, v)
        metric = max(metric, bu.metric_residual(), bv.metric_residual(),
                     rel.boost_matrix_velocity(w).metric_residual())

        s = random_squeeze(rng, 5.0)
        br = rel.boost_matrix_rapidity(s.rho, s.phi)
        bvel = rel.boost_matrix_velocity(cor.squeeze_to_velocity(s))
        scale = max(1.0, float(np.max(np.abs(br.m))))
        par = max(par, float(np.max(np.abs(br.m - bvel.m))) / scale)
        adj = max(adj, float(np.max(np.abs(cor.adjoint_boost_from_squeeze(s).m - br.m))))
        metric = max(metric, br.metric_residual(), bvel.metric_residual())

        ws, _ = cor.velocity_addition_via_squeeze(u, v)
        dic = max(dic, float(np.max(np.abs(ws.array - w.array))))
        gam = max(gam, abs(rel.gamma_compose(u, v) / rel.gamma(w) - 1.0))
        wig = max(wig, wigner_3x3_mismatch(u, v))

    out = [
        _check("metric_preservation", metric, overrides),
        _check("rapidity_vs_velocity", par, overrides),
        _check("adjoint_vs_rapidity", adj, overrides),
        _check("dictionary", dic, overrides),
        _check("gamma_composition", gam, overrides),
        _check("wigner_3x3", wig, overrides),
    ]
    fock = 0.0
    for _ in range(N_FOCK):
        s = random_squeeze(rng, FOCK_RHO_MAX)
        ext = fo.adjoint_action_matrix(s, dim)
        fock = max(fock, float(np.max(np.abs(ext - cor.adjoint_boost_from_squeeze(s).m))))
    out.append(_check("fock_adjoint", fock, overrides))
    return out


SUITES = {
    "algebra": algebra_checks,
    "composition": composition_checks,
    "boost": boost_checks,
}


def run_suite(suite: str, dim: int = 60, seed: int = 0, overrides=None) -> dict:
    overrides = overrides or {}
    names = list(SUITES) if suite == "all" else [suite]
    rng = np.random.default_rng(seed)
    checks = []
    for name in names:
        checks.extend(SUITES[name](dim, rng, overrides))
    return {
        "suite": suite,
        "dim": dim,
        "seed": seed,
        "checks": checks,
        "passed": all(c["passed"] for c in checks),
    }
