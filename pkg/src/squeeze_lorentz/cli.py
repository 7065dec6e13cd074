"""Command-line front end.

All angles are radians and all velocities are in units of c.  Output is
JSON on stdout (sorted keys, so identical inputs give identical bytes);
``fringe --scan K`` writes CSV instead.  Exit codes: 0 ok, 1 a
verification residual exceeded its tolerance, 2 bad arguments.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import math
import sys

import numpy as np

from . import experiment_sim as ex
from . import verify as vf
from .correspondence import velocity_addition_via_squeeze
from .errors import SuperluminalInput
from .relativity import (Velocity2, add_velocities, boost_matrix_rapidity,
                         boost_matrix_velocity, galilean_limit_check, gamma,
                         gamma_compose)
from .squeeze_algebra import SqueezeParam, compose_squeezes_closed_form


class UsageError(Exception):
    pass


def _pair(text):
    try:
        x, y = (float(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected VX,VY, got {text!r}")
    return x, y


def _floats(text):
    try:
        return [float(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _tol_override(text):
    name, sep, value = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected NAME=VALUE, got {text!r}")
    try:
        return name, float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad tolerance value in {text!r}")


def _velocity(xy):
    try:
        return Velocity2(*xy)
    except SuperluminalInput as err:
        raise UsageError(str(err))


def _squeeze(rho, phi):
    try:
        return SqueezeParam(rho, phi)
    except ValueError as err:
        raise UsageError(str(err))


def _dim(dim, lo=2):
    if dim < lo:
        raise UsageError(f"--dim must be at least {lo}")
    return dim


def cmd_add_velocities(args):
    u, v = _velocity(args.u), _velocity(args.v)
    direct = add_velocities(u, v)
    w, delta = velocity_addition_via_squeeze(u, v)
    return {
        "w": [direct.vx, direct.vy],
        "gamma_w": gamma_compose(u, v),
        "delta_rad": delta,
        "residual": float(np.max(np.abs(w.array - direct.array))),
    }


def cmd_wigner(args):
    res = compose_squeezes_closed_form(_squeeze(args.rho1, args.phi1),
                                       _squeeze(args.rho2, args.phi2))
    return {
        "rho3": res.beta3.rho,
        "phi3": res.beta3.phi,
        "delta": res.delta,
        "branch": "degenerate" if res.degenerate else "principal",
    }


def cmd_boost(args):
    if args.v is not None:
        if args.rho is not None or args.phi is not None:
            raise UsageError("give either --v or --rho/--phi, not both")
        b = boost_matrix_velocity(_velocity(args.v))
    else:
        if args.rho is None:
            raise UsageError("--rho (or --v) is required")
        if args.rho < 0:
            raise UsageError("--rho must be non-negative")
        b = boost_matrix_rapidity(args.rho, args.phi or 0.0)
    return {"matrix": b.m.tolist(), "metric_residual": b.metric_residual()}


def cmd_verify(args):
    _dim(args.dim, 8)
    overrides = dict(args.tol or [])
    unknown = set(overrides) - set(vf.TOLERANCES)
    if unknown:
        raise UsageError(f"unknown tolerance name(s): {', '.join(sorted(unknown))}")
    report = vf.run_suite(args.suite, dim=args.dim, seed=args.seed, overrides=overrides)
    return report, 0 if report["passed"] else 1


def cmd_fringe(args):
    _dim(args.dim)
    s1, s2 = _squeeze(args.rho1, args.phi1), _squeeze(args.rho2, args.phi2)
    if args.scan is not None:
        if args.scan < 1:
            raise UsageError("--scan needs at least one point")
        phases = np.linspace(-math.pi, math.pi, args.scan, endpoint=False)
        ints = ex.fringe_scan(s1, s2, args.dim, phases)
        rows = ["theta_rad,intensity"] + [f"{float(t)!r},{float(i)!r}" for t, i in zip(phases, ints)]
        return "\n".join(rows) + "\n"
    res = ex.nopa_pipeline(s1, s2, args.dim)
    return {
        "delta_prime": res.delta_prime,
        "delta": compose_squeezes_closed_form(s1, s2).delta,
        "visibility": res.visibility,
    }


def cmd_galilean(args):
    u, v = np.array(args.u), np.array(args.v)
    scales = args.scales
    if len(scales) < 2 or min(scales) < 1:
        raise UsageError("--scales needs at least two values, all >= 1")
    try:
        devs = [galilean_limit_check(u, v, s) for s in scales]
    except SuperluminalInput as err:
        raise UsageError(str(err))
    table = [{"scale": s, "deviation": d} for s, d in zip(scales, devs)]
    if all(d > 0 for d in devs):
        exponent = float(np.polyfit(np.log(scales), np.log(devs), 1)[0])
    else:
        exponent = None
    return {"table": table, "exponent": exponent}


def build_parser():
    p = argparse.ArgumentParser(prog="squeeze-lorentz",
                                description="Squeeze-operator composition as (2+1)D Lorentz kinematics.")
    p.add_argument("--format", choices=("json", "text"), default="json")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("add-velocities", help="relativistic u (+) v via both pipelines")
    q.add_argument("--u", type=_pair, required=True, metavar="VX,VY")
    q.add_argument("--v", type=_pair, required=True, metavar="VX,VY")
    q.set_defaults(func=cmd_add_velocities)

    q = sub.add_parser("wigner", help="compose two squeezes, report beta3 and the Wigner angle")
    for name in ("rho1", "phi1", "rho2", "phi2"):
        q.add_argument(f"--{name}", type=float, required=True)
    q.set_defaults(func=cmd_wigner)

    q = sub.add_parser("boost", help="3x3 boost matrix")
    q.add_argument("--rho", type=float)
    q.add_argument("--phi", type=float)
    q.add_argument("--v", type=_pair, metavar="VX,VY")
    q.set_defaults(func=cmd_boost)

    q = sub.add_parser("verify", help="run oracle suites; exit 1 on any failure")
    q.add_argument("--suite", choices=("algebra", "composition", "boost", "all"), default="all")
    q.add_argument("--dim", type=int, default=60)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--tol", type=_tol_override, action="append", metavar="NAME=VALUE",
                   help="override a named tolerance; repeatable")
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("fringe", help="simulated two-mode interference")
    for name in ("rho1", "phi1", "rho2", "phi2"):
        q.add_argument(f"--{name}", type=float, required=True)
    q.add_argument("--dim", type=int, default=30)
    q.add_argument("--scan", type=int, metavar="K", help="emit a K-point CSV intensity scan")
    q.set_defaults(func=cmd_fringe)

    q = sub.add_parser("galilean", help="deviation from u + v as c grows")
    q.add_argument("--u", type=_pair, required=True, metavar="VX,VY")
    q.add_argument("--v", type=_pair, required=True, metavar="VX,VY")
    q.add_argument("--scales", type=_floats, default=[10.0, 100.0, 1000.0])
    q.set_defaults(func=cmd_galilean)
    return p


def _as_text(obj, prefix=""):
    lines = []
    for key in sorted(obj):
        val = obj[key]
        if isinstance(val, dict):
            lines.extend(_as_text(val, f"{prefix}{key}."))
        else:
            lines.append(f"{prefix}{key}: {json.dumps(val)}")
    return lines


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        # argparse prints help and errors itself; keep them on our streams
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = args.func(args)
    except UsageError as err:
        print(f"squeeze-lorentz: error: {err}", file=stderr)
        return 2
    code = 0
    if isinstance(out, tuple):
        out, code = out
    if isinstance(out, str):
        stdout.write(out)
    elif args.format == "text":
        stdout.write("\n".join(_as_text(out)) + "\n")
    else:
        stdout.write(json.dumps(out, indent=2, sort_keys=True) + "\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
