import csv
import io
import json
import math

import pytest

from squeeze_lorentz.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, _ = call(*argv)
    return code, json.loads(out)


def test_add_velocities_collinear():
    code, data = call_json("add-velocities", "--u", "0.5,0", "--v", "0.5,0")
    assert code == 0
    assert set(data) == {"w", "gamma_w", "delta_rad", "residual"}
    assert data["w"] == pytest.approx([0.8, 0.0], abs=1e-15)
    assert data["delta_rad"] == 0
    assert data["gamma_w"] == pytest.approx(5 / 3)
    assert data["residual"] < 1e-12


def test_wigner():
    code, data = call_json("wigner", "--rho1", "1", "--phi1", "0", "--rho2", "1", "--phi2", "1.5707963")
    assert code == 0
    assert set(data) == {"rho3", "phi3", "delta", "branch"}
    assert data["delta"] == pytest.approx(0.4208, abs=1e-4)
    assert data["branch"] == "principal"


def test_wigner_degenerate():
    code, data = call_json("wigner", "--rho1", "1", "--phi1", "0", "--rho2", "1", "--phi2", str(math.pi))
    assert code == 0
    assert data["branch"] == "degenerate"


def test_boost_rapidity_and_velocity():
    code, data = call_json("boost", "--rho", "0.5", "--phi", "0.2")
    assert code == 0
    assert len(data["matrix"]) == 3 and data["metric_residual"] < 1e-12
    code, data = call_json("boost", "--v", "0.6,0")
    assert data["matrix"][0] == pytest.approx([1.25, -0.75, 0.0])


def test_boost_conflicting_args():
    code, _, err = call("boost", "--rho", "1", "--v", "0.1,0")
    assert code == 2 and "either" in err


def test_superluminal_is_usage_error():
    code, out, err = call("add-velocities", "--u", "0.8,0.7", "--v", "0,0")
    assert code == 2 and out == "" and "subluminal" in err


def test_unparseable_pair():
    code, _, err = call("add-velocities", "--u", "abc", "--v", "0,0")
    assert code == 2 and "VX,VY" in err


def test_missing_subcommand():
    code, _, _ = call()
    assert code == 2


def test_negative_rho():
    code, _, err = call("wigner", "--rho1", "-1", "--phi1", "0", "--rho2", "1", "--phi2", "0")
    assert code == 2


def test_verify_all_passes():
    code, data = call_json("verify", "--suite", "all", "--dim", "60", "--seed", "7")
    assert code == 0
    assert data["passed"]
    assert all(c["residual"] <= c["tolerance"] for c in data["checks"])
    assert {c["name"] for c in data["checks"]} >= {"fock_composition", "fock_adjoint", "dictionary"}


def test_verify_deterministic():
    a = call("verify", "--suite", "composition", "--dim", "30", "--seed", "3")
    b = call("verify", "--suite", "composition", "--dim", "30", "--seed", "3")
    assert a == b


def test_verify_failure_exit_code():
    code, data = call_json("verify", "--suite", "algebra", "--dim", "30", "--tol", "unitarity=0")
    assert code == 1
    assert not data["passed"]
    assert [c["name"] for c in data["checks"] if not c["passed"]] == ["unitarity"]


def test_verify_unknown_tolerance():
    code, _, err = call("verify", "--tol", "nonsense=1")
    assert code == 2 and "nonsense" in err


def test_verify_small_truncation_fails_honestly():
    code, data = call_json("verify", "--suite", "composition", "--dim", "12", "--seed", "1")
    assert code == 1
    fock = next(c for c in data["checks"] if c["name"] == "fock_composition")
    assert not fock["passed"]


def test_fringe_json():
    code, data = call_json("fringe", "--rho1", "0.4", "--phi1", "0", "--rho2", "0.4",
                           "--phi2", "1.5", "--dim", "16")
    assert code == 0
    assert set(data) == {"delta_prime", "delta", "visibility"}
    assert data["delta_prime"] == pytest.approx(data["delta"], abs=1e-6)


def test_fringe_csv():
    code, out, _ = call("fringe", "--rho1", "0.4", "--phi1", "0", "--rho2", "0.4",
                        "--phi2", "1.5", "--dim", "12", "--scan", "36")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["theta_rad", "intensity"]
    assert len(rows) == 37
    assert all(0 <= float(r[1]) <= 1 + 1e-9 for r in rows[1:])


def test_galilean():
    code, data = call_json("galilean", "--u", "0.5,0", "--v", "0,0.5", "--scales", "10,100,1000")
    assert code == 0
    assert [row["scale"] for row in data["table"]] == [10, 100, 1000]
    assert data["exponent"] == pytest.approx(-2, abs=0.1)


def test_galilean_accepts_large_bare_velocities():
    code, data = call_json("galilean", "--u", "3,0", "--v", "0,2", "--scales", "10,100")
    assert code == 0 and data["exponent"] < -1.9


def test_text_format():
    code, out, _ = call("--format", "text", "add-velocities", "--u", "0.5,0", "--v", "0,0.5")
    assert code == 0
    assert out.splitlines()[0].startswith("delta_rad: ")
