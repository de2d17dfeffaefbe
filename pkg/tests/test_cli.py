"""Command-line interface: JSON payloads, CSV export, exit codes."""

import json
from pathlib import Path

import pytest
from click.testing import CliRunner
from jsonschema import Draft202012Validator

from orthogame.cli import main

SCHEMA_DIR = Path(__file__).resolve().parent.parent / "docs" / "schemas"


def _check_schema(payload, name):
    schema = json.loads((SCHEMA_DIR / f"{name}.schema.json").read_text())
    Draft202012Validator.check_schema(schema)
    Draft202012Validator(schema).validate(payload)


@pytest.fixture
def runner():
    return CliRunner()


def _run_json(runner, args):
    result = runner.invoke(main, args)
    assert result.exit_code == 0, result.output
    return json.loads(result.output)


def test_classical_solve_payload(runner):
    payload = _run_json(runner, ["classical", "solve", "-p", "3,3,5,1"])
    _check_schema(payload, "classical_solve")
    assert payload["value"] == pytest.approx(15 / 28, abs=1e-12)
    assert payload["x"] == pytest.approx([5 / 28, 5 / 28, 3 / 28, 15 / 28], abs=1e-12)
    assert payload["y"] == pytest.approx([3 / 28, 15 / 28, 5 / 28, 5 / 28], abs=1e-12)
    cond = payload["conditional"]
    assert cond["P13"] == pytest.approx(4 / 49, abs=1e-12)
    assert cond["P24"] == pytest.approx(25 / 49, abs=1e-12)
    assert cond["E13"] == pytest.approx(1.875, abs=1e-12)
    assert cond["E24"] == pytest.approx(0.75, abs=1e-12)
    assert payload["nash_verified"] is True
    assert payload["max_violation"] <= 1e-12


@pytest.mark.parametrize("stakes", ["0,1,1,1", "-1,1,1,1", "1,2,3", "a,b,c,d", "1,2,3,4,5"])
def test_classical_solve_rejects_bad_stakes(runner, stakes):
    result = runner.invoke(main, ["classical", "solve", "-p", stakes])
    assert result.exit_code == 2


def test_quantum_solve_reference_config(runner):
    payload = _run_json(runner, ["quantum", "solve", "-p", "3,3,5,1",
                                 "--theta-a", "10", "--theta-b", "70"])
    _check_schema(payload, "quantum_solve")
    assert payload["scan_step_deg"] == 0.25
    assert payload["degeneracy_regions"] == []
    assert len(payload["equilibria"]) == 1
    eq = payload["equilibria"][0]
    assert eq["verified"] is True
    assert eq["alpha_deg"] == pytest.approx(145.4422, abs=0.01)
    assert eq["beta_deg"] == pytest.approx(59.3824, abs=0.01)
    assert eq["value"] == pytest.approx(2.45152, abs=1e-4)
    assert eq["p"] == pytest.approx([0.6782, 0.5077, 0.3218, 0.4923], abs=1e-3)
    assert eq["q"] == pytest.approx([0.2594, 0.9661, 0.7406, 0.0339], abs=1e-3)
    assert sum(eq["terms"]) == pytest.approx(eq["value"], abs=1e-12)
    assert payload["notes"] and "reference tables" in payload["notes"][0]


def test_quantum_solve_input_errors(runner):
    base = ["quantum", "solve", "-p", "3,3,5,1"]
    assert runner.invoke(main, base + ["--theta-a", "180", "--theta-b", "70"]).exit_code == 2
    assert runner.invoke(main, base + ["--theta-a", "10", "--theta-b", "70",
                                       "--step", "2.0"]).exit_code == 2
    assert runner.invoke(main, base + ["--theta-a", "10", "--theta-b", "70",
                                       "--refine-tol", "0.02"]).exit_code == 2


def test_quantum_payoff_values(runner):
    payload = _run_json(runner, ["quantum", "payoff", "-p", "3,3,5,1",
                                 "--theta-a", "10", "--theta-b", "70",
                                 "--alpha", "145.5", "--beta", "59.5"])
    _check_schema(payload, "quantum_payoff")
    assert payload["value"] == pytest.approx(2.452, abs=2e-3)
    assert sum(payload["terms"]) == pytest.approx(payload["value"], abs=1e-12)
    assert payload["p"][0] + payload["p"][2] == pytest.approx(1.0, abs=1e-15)
    assert payload["q"][1] + payload["q"][3] == pytest.approx(1.0, abs=1e-15)


def test_quantum_payoff_wraps_angles(runner):
    payload = _run_json(runner, ["quantum", "payoff", "-p", "3,3,5,1",
                                 "--theta-a", "10", "--theta-b", "70",
                                 "--alpha", "325.5", "--beta", "-120.5"])
    assert payload["alpha_deg"] == 145.5
    assert payload["beta_deg"] == 59.5


def test_curves_export(runner, tmp_path):
    out = tmp_path / "curves"
    result = runner.invoke(main, ["quantum", "curves", "-p", "1,1,1,1",
                                  "--theta-a", "45", "--theta-b", "45",
                                  "--out", str(out)])
    assert result.exit_code == 0, result.output
    assert result.output.count("wrote ") == 3

    alice = (out / "alice.csv").read_text().splitlines()
    bob = (out / "bob.csv").read_text().splitlines()
    assert len(alice) == 181 and len(bob) == 181
    assert alice[0] == "input_deg,best_response_deg,payoff"
    assert alice[1] == "0,90,1.5"
    assert bob[1] == "0,0,0.5"

    sidecar = json.loads((out / "degeneracies.json").read_text())
    _check_schema(sidecar, "curves_sidecar")
    assert sidecar["degenerate_inputs"] == {"alice": [], "bob": []}


def test_curves_degenerate_rows(runner, tmp_path):
    out = tmp_path / "curves"
    result = runner.invoke(main, ["quantum", "curves", "-p", "1,1,1,3",
                                  "--theta-a", "20", "--theta-b", "-15",
                                  "--out", str(out)])
    assert result.exit_code == 0, result.output
    alice = (out / "alice.csv").read_text().splitlines()
    assert "45,NaN,NaN" in alice
    sidecar = json.loads((out / "degeneracies.json").read_text())
    _check_schema(sidecar, "curves_sidecar")
    assert sidecar["degenerate_inputs"]["alice"] == [45.0]
    assert sidecar["degenerate_inputs"]["bob"] == []


def test_curves_chart_jump_in_export(runner, tmp_path):
    out = tmp_path / "curves"
    result = runner.invoke(main, ["quantum", "curves", "-p", "3,3,5,1",
                                  "--theta-a", "10", "--theta-b", "70",
                                  "--out", str(out)])
    assert result.exit_code == 0, result.output
    rows = (out / "alice.csv").read_text().splitlines()[1:]
    values = [float(r.split(",")[1]) for r in rows]
    assert max(abs(b - a) for a, b in zip(values, values[1:])) > 45.0


def test_curves_io_error(runner, tmp_path):
    blocker = tmp_path / "taken"
    blocker.write_text("a plain file where the directory should go\n")
    result = runner.invoke(main, ["quantum", "curves", "-p", "1,1,1,1",
                                  "--theta-a", "45", "--theta-b", "45",
                                  "--out", str(blocker)])
    assert result.exit_code == 3
    assert "cannot write" in result.stderr


def test_curves_step_validation(runner, tmp_path):
    result = runner.invoke(main, ["quantum", "curves", "-p", "1,1,1,1",
                                  "--theta-a", "45", "--theta-b", "45",
                                  "--step", "9", "--out", str(tmp_path / "x")])
    assert result.exit_code == 2


def test_lattice_audit_payload(runner):
    payload = _run_json(runner, ["lattice", "audit"])
    _check_schema(payload, "lattice_audit")
    assert payload["de_morgan"] is True
    assert payload["double_negation"] is True
    assert payload["excluded_middle"] is True
    assert payload["non_contradiction"] is True
    assert payload["distributive"] is False
    assert payload["counterexample_count"] == 24
    assert len(payload["counterexamples"]) == 24
    assert payload["predicate_sums"] == [3, 3, 3, 3]


@pytest.mark.parametrize("example", ["classical", "1", "2", "3"])
def test_reproduce_exits_zero(runner, example):
    result = runner.invoke(main, ["reproduce", example])
    assert result.exit_code == 0, result.output
    assert "result: PASS" in result.output


def test_reproduce_human_report(runner):
    result = runner.invoke(main, ["reproduce", "1"])
    assert result.exit_code == 0
    assert "reference audit: example 1" in result.output
    assert "MATCH" in result.output
    assert "KNOWN-DISCREPANCY" in result.output
    assert "MISMATCH " not in result.output
    assert "result: PASS (8 matched, 4 known discrepancies)" in result.output


@pytest.mark.parametrize("example", ["classical", "1", "2", "3"])
def test_reproduce_json_schema(runner, example):
    payload = _run_json(runner, ["reproduce", example, "--json"])
    _check_schema(payload, "reproduce")
    assert payload["passed"] is True
    assert payload["example_id"] == example


def test_reproduce_unknown_example(runner):
    assert runner.invoke(main, ["reproduce", "4"]).exit_code == 2


def test_reproduce_deterministic(runner):
    first = runner.invoke(main, ["reproduce", "1", "--json"]).output
    second = runner.invoke(main, ["reproduce", "1", "--json"]).output
    assert first == second
