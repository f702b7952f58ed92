import json
import subprocess
import sys

import pytest

from aqrook.cli import CliConfig, UsageError, main, resolve_workers, run_captured
from aqrook.boards import rectangle, staircase
from aqrook.exactalg import parse_ratexpr
from aqrook.rookmodels import rook_alpha, rook_standard


def test_compute_text_example():
    code, out, _ = run_captured(["compute", "--model", "standard", "--family", "rect:1,1", "--k", "0", "--format", "text"])
    assert code == 0 and out.strip() == "(1-b^2*s^2)/(s^2-b^2)"


def test_compute_matching_example():
    code, out, _ = run_captured(["compute", "--model", "matching", "--family", "matchfull:1", "--k", "1"])
    assert code == 0 and out.strip() == "1"


def test_compute_bad_board():
    code, out, err = run_captured(["compute", "--model", "standard", "--board", "2,1", "--k", "0"])
    assert code == 2 and out == "" and "NotNondecreasing" in err


@pytest.mark.parametrize("argv", [
    ["compute", "--model", "matching", "--family", "rect:1,1"],
    ["compute", "--model", "standard", "--family", "matchfull:2"],
    ["compute", "--model", "alpha", "--family", "stair:3"],
    ["compute", "--model", "standard"],
    ["compute", "--board", "1", "--family", "rect:1,1"],
    ["compute", "--board", "1", "--k", "-1"],
    ["compute", "--family", "lah:1,2"],
    ["compute", "--family", "nope:1"],
    ["compute", "--model", "other", "--board", "1"],
])
def test_compute_usage_errors(argv):
    code, out, err = run_captured(argv)
    assert code == 2 and out == "" and err


def test_compute_json_roundtrip_and_counts():
    code, out, _ = run_captured(["compute", "--family", "rect:2,2", "--format", "json", "--counts"])
    assert code == 0
    data = json.loads(out)
    assert data["board"] == "2,2" and data["model"] == "standard"
    assert [row["k"] for row in data["values"]] == [0, 1, 2]
    assert [row["placements"] for row in data["values"]] == [1, 4, 2]
    for row in data["values"]:
        value = parse_ratexpr(row["value"])
        assert str(value) == row["value"]
        assert value == rook_standard(rectangle(2, 2), row["k"])


def test_table_alpha_rows():
    code, out, _ = run_captured(["table", "--model", "alpha", "--alpha", "2", "--family", "stair:3"])
    assert code == 0
    lines = out.strip().splitlines()
    assert [line.split(":")[0] for line in lines] == ["k=0", "k=1", "k=2"]
    for k, line in enumerate(lines):
        assert parse_ratexpr(line.split(": ", 1)[1]) == rook_alpha(staircase(3), k, 2)


def test_table_latex():
    code, out, _ = run_captured(["table", "--model", "standard", "--family", "rect:2,2", "--format", "latex"])
    assert code == 0
    assert out.startswith(r"\begin{tabular}") and out.strip().endswith(r"\end{tabular}")
    assert r"\frac{" in out and "*" not in out


def test_table_range():
    code, out, _ = run_captured(["table", "--family", "rect:3,3", "--k-min", "1", "--k-max", "2"])
    assert code == 0 and len(out.strip().splitlines()) == 2
    code, _, err = run_captured(["table", "--family", "rect:3,3", "--k-min", "2", "--k-max", "1"])
    assert code == 2 and "range" in err
    code, _, _ = run_captured(["table", "--family", "rect:3,3", "--k-min", "-1"])
    assert code == 2


@pytest.mark.parametrize("argv", [
    ["verify", "--identity", "qpfaff", "--n", "3", "--r", "1"],
    ["verify", "--identity", "jain", "--n", "0"],
    ["verify", "--identity", "product-standard", "--family", "stair:3"],
    ["verify", "--identity", "product-alpha", "--board", "1,2", "--alpha", "3"],
    ["verify", "--identity", "product-matching", "--family", "shifted:4:7,5,4,2"],
    ["verify", "--identity", "lah-product", "--n", "3", "--r", "2"],
    ["verify", "--identity", "pfaff-standard", "--n", "2", "--r", "2"],
    ["verify", "--identity", "whipple", "--n", "2"],
    ["verify", "--identity", "matching-saalschutz", "--n", "2"],
    ["verify", "--identity", "reversal", "--n", "2"],
    ["verify", "--identity", "binomial-recursions", "--max-n", "3"],
])
def test_verify_holds(argv):
    code, out, _ = run_captured(argv)
    assert code == 0
    data = json.loads(out)
    assert data["holds"] is True and data["identity"] == argv[2]
    assert "witness" not in data


@pytest.mark.parametrize("argv, needle", [
    (["verify", "--identity", "qpfaff", "--n", "2", "--r", "0"], "DegenerateParameters"),
    (["verify", "--identity", "qpfaff", "--n", "2"], "--r"),
    (["verify", "--identity", "jain", "--n", "-1"], "--n"),
    (["verify", "--identity", "lah-product", "--n", "1", "--r", "2"], "InvalidFamilyParams"),
    (["verify", "--identity", "product-matching", "--board", "1,2"], "shifted"),
    (["verify", "--identity", "nonsense", "--n", "1"], "invalid choice"),
])
def test_verify_usage_errors(argv, needle):
    code, out, err = run_captured(argv)
    assert code == 2 and out == "" and needle in err


def test_verify_failure_exits_one(monkeypatch):
    from aqrook import cli
    from aqrook.exactalg import ONE, ZERO
    from aqrook.identities import check_cases

    monkeypatch.setitem(cli.IDENTITIES, "jain", lambda c: check_cases("jain", {"n": c.n}, [("sum", ONE, ZERO)]))
    code, out, _ = run_captured(["verify", "--identity", "jain", "--n", "1"])
    assert code == 1
    data = json.loads(out)
    assert data["holds"] is False
    assert parse_ratexpr(data["witness"]["lhs"]) == ONE


def test_suite_reduced_bounds():
    code, out, _ = run_captured(["suite", "--max-n", "2"])
    assert code == 0
    lines = out.strip().splitlines()
    assert len([l for l in lines if l.startswith("[PASS]")]) == 10
    assert lines[-1].startswith("all criteria passed")


def test_suite_json_array():
    code, out, _ = run_captured(["suite", "--max-n", "1", "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert isinstance(data, list) and data
    assert {d["criterion"] for d in data} == set(range(1, 11))
    assert all(d["holds"] for d in data)


def test_suite_failure_exits_one(monkeypatch):
    from aqrook import suite
    from aqrook.identities import VerificationReport

    crits = list(suite.CRITERIA)
    crits[0] = (1, "broken", lambda b: [VerificationReport("x", {}, False, {"case": "c", "lhs": "1", "rhs": "0"})])
    monkeypatch.setattr(suite, "CRITERIA", crits)
    code, out, _ = run_captured(["suite", "--max-n", "1"])
    assert code == 1 and "[FAIL] criterion  1" in out


def test_workers_resolution():
    assert resolve_workers(3, {}) == 3
    assert resolve_workers(None, {"AQROOK_WORKERS": "4"}) == 4
    assert resolve_workers(2, {"AQROOK_WORKERS": "4"}) == 2
    assert resolve_workers(None, {}) == 1
    with pytest.raises(UsageError):
        resolve_workers(None, {"AQROOK_WORKERS": "many"})
    code, _, err = run_captured(["suite", "--workers", "0"])
    assert code == 2 and "worker" in err


def test_config_invariants():
    assert CliConfig("compute").fmt == "text"
    for bad in [dict(command="plot"), dict(command="suite", fmt="csv"), dict(command="suite", workers=0)]:
        with pytest.raises(UsageError):
            CliConfig(**bad)


def test_parallel_suite_matches_serial():
    from aqrook.suite import SuiteBounds, run_suite

    bounds = SuiteBounds().capped(2)
    serial = run_suite(bounds, workers=1)
    parallel = run_suite(bounds, workers=2)
    assert [r.number for r in parallel] == list(range(1, 11))
    for a, b in zip(serial, parallel):
        assert [x.to_json()["params"] for x in a.reports] == [x.to_json()["params"] for x in b.reports]
        assert a.passed and b.passed


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "aqrook", "verify", "--identity", "qpfaff", "--n", "2", "--r", "0"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 2 and "DegenerateParameters" in proc.stderr
    proc = subprocess.run(
        [sys.executable, "-m", "aqrook", "compute", "--family", "rect:1,1", "--k", "0"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "(1-b^2*s^2)/(s^2-b^2)"
