"""The command-line front end: outputs, JSON determinism and exit codes."""

from __future__ import annotations

import json

import pytest

from arikikoike import checks, cli
from arikikoike.criteria import CriteriaReport


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("m,r,size", [(1, 2, 2), (2, 2, 8), (3, 3, 162)])
def test_basis_sizes(capsys, m, r, size):
    code, out, _ = run(capsys, "basis", "-m", str(m), "-r", str(r), "--json")
    assert code == 0
    assert json.loads(out)["size"] == size


def test_mul_quadratic(capsys):
    code, out, _ = run(capsys, "mul", "-m", "2", "-r", "2", "T1", "T1")
    assert code == 0
    assert out.strip() == "(q) + (q - 1)*T21"


def test_mul_L_commute(capsys):
    _, a, _ = run(capsys, "mul", "-m", "2", "-r", "2", "L1", "L2", "--json")
    _, b, _ = run(capsys, "mul", "-m", "2", "-r", "2", "L2", "L1", "--json")
    assert a == b


def test_mul_accepts_json_operands(capsys):
    _, t0, _ = run(capsys, "nf", "-m", "2", "-r", "2", "T0", "--json")
    code, out, _ = run(capsys, "mul", "-m", "2", "-r", "2", t0.strip(), "T0")
    assert code == 0
    assert out.strip() == "(-u1*u2) + (u1 + u2)*L1"


def test_nf_recovers_L2(capsys):
    code, out, _ = run(capsys, "nf", "-m", "2", "-r", "2", "T1", "T0", "T1", "q^-1")
    assert code == 0
    assert out.strip() == "(1)*L2"


def test_constructions_example(capsys):
    code, out, _ = run(capsys, "constructions", "-m", "2", "-r", "1", "--spec", "q=2,u=[1,3]",
                       "--a", "[0,1,1]", "--json")
    assert code == 0
    rec = json.loads(out)["constructions"][0]
    assert rec["z_invertible"] and rec["idempotent_ok"]
    assert rec["e_a"] == [{"c": [0], "w": [1], "coeff": "3/2"},
                          {"c": [1], "w": [1], "coeff": "-1/2"}]


def test_constructions_rejects_foreign_composition(capsys):
    code, _, err = run(capsys, "constructions", "-m", "2", "-r", "2", "--a", "[0,1,1]")
    assert code == 2 and "Lambda" in err


def test_poincare_values(capsys):
    code, out, _ = run(capsys, "poincare", "-m", "2", "-r", "2", "--spec", "q=1,u=[1,3]", "--json")
    assert code == 0
    values = json.loads(out)["values"]
    assert values["f"]["value"] == "-8"
    assert values["d_W"]["value"] == "-16"
    assert values["e"] == "inf"


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "lemma-2.8", "-m", "2", "-r", "2")
    assert code == 0
    assert "all checks pass" in out


def test_verify_reports_non_semisimple(capsys):
    code, out, _ = run(capsys, "verify", "thm-5.2", "-m", "2", "-r", "2",
                       "--spec", "q=-1,u=[1,3]")
    assert code == 0
    assert "verdict: not semisimple" in out


def test_verify_json_is_deterministic(capsys):
    argv = ["verify", "prop-4.3", "-m", "2", "-r", "2", "--grid", "--json"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    data = json.loads(first)
    assert data["grid_version"] == 1 and len(data["reports"]) >= 10


def test_failed_check_exits_1(capsys, monkeypatch):
    def failing(ctx):
        rep = CriteriaReport("relations", ctx.m, ctx.r, None)
        rep.add("forced failure", False, why="test")
        return rep
    monkeypatch.setitem(checks.CHECKS, "relations", failing)
    code, out, _ = run(capsys, "verify", "relations", "-m", "1", "-r", "1")
    assert code == 1
    assert "FAIL  forced failure" in out


@pytest.mark.parametrize("argv", [
    ["verify", "thm-3.4", "-m", "5", "-r", "9"],
    ["verify", "no-such-check", "-m", "2", "-r", "2"],
    ["verify", "cor-3.11", "-m", "2", "-r", "2", "--spec", "q=1,u=[1,1]"],
    ["verify", "thm-5.2", "-m", "2", "-r", "2"] + ["--spec", "q=2,u=[3,5],field=Fp:7"],
    ["basis", "-m", "0", "-r", "2"],
    ["basis", "-m", "2", "-r", "2", "--spec", "q=2,u=[1,2,3]"],
    ["basis", "-m", "2", "-r", "2", "--spec", "nonsense"],
    ["nf", "-m", "2", "-r", "2", "T7"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")


def test_limit_override(capsys):
    code, _, _ = run(capsys, "basis", "-m", "2", "-r", "3", "--limit", "10")
    assert code == 2
    code, _, _ = run(capsys, "basis", "-m", "2", "-r", "3", "--limit", "48")
    assert code == 0
