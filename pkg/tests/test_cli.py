from __future__ import annotations

import json
import subprocess
import sys

import pytest

from grhopf.cli.main import COMMANDS, CommandRequest, main, resolve_input, run, run_one

from conftest import DATA, FIXTURE_NAMES, NEGATIVE_NAMES


def records(capsys, argv):
    status = main(argv)
    out = capsys.readouterr().out
    return status, [json.loads(line) for line in out.splitlines() if line.strip()]


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_every_bundled_fixture_verifies(capsys, name):
    status, [rec] = records(capsys, ["verify", f"fixtures/{name}.ghopf", "--json"])
    assert status == 0
    assert rec["ok"] and all(c["passed"] for c in rec["checks"])
    assert {"command", "input", "result", "checks", "error"} <= set(rec)


@pytest.mark.parametrize("name", NEGATIVE_NAMES)
def test_negative_fixtures_fail_verification(capsys, name):
    status, [rec] = records(capsys, ["verify", str(DATA / f"{name}.ghopf"), "--json"])
    assert status == 1
    failed = [c for c in rec["checks"] if not c["passed"]]
    assert failed and all(c.get("witness") for c in failed)


def test_antipode_command_text(capsys):
    assert main(["antipode", "fixtures/mu3_f2.ghopf"]) == 0
    assert "S(x) = x^2" in capsys.readouterr().out


def test_decompose_command(capsys):
    status, [rec] = records(capsys, ["decompose", "mu3_q", "--json"])
    assert status == 0
    res = rec["result"]
    assert res["component_count"] == 2
    assert res["components"][0]["idempotent"] == "1/3*(x^2 + x + 1)"
    assert res["components"][0]["counit_component"]
    assert sorted(res["idempotents"]) == sorted(["0", "1", "1/3*(x^2 + x + 1)", "-1/3*(x^2 + x - 2)"])


def test_points_command_and_budget(capsys):
    status, [rec] = records(capsys, ["points", "a1", "--ring", "gf2_a4", "--json"])
    assert status == 0 and rec["result"]["order"] == 4
    status, [rec] = records(capsys, ["points", "a1", "--ring", "gf2_a4", "--budget", "2", "--json"])
    assert status == 3 and rec["error"]["kind"] == "budget"


def test_points_without_ring_is_an_input_error(capsys):
    status, [rec] = records(capsys, ["points", "a1", "--json"])
    assert status == 2


def test_parse_error_is_an_input_error(tmp_path, capsys):
    bad = tmp_path / "bad.ghopf"
    bad.write_text("algebra A over GF(2)\ngen x deg 1\ngen y deg 0\nrel x^3 = y\n")
    status, [rec] = records(capsys, ["verify", str(bad), "--json"])
    assert status == 2
    assert rec["error"]["kind"] == "parse" and rec["error"]["line"] == 4
    assert "inhomogeneous" in rec["error"]["message"]


def test_missing_file(capsys):
    status, [rec] = records(capsys, ["verify", "no_such_file", "--json"])
    assert status == 2


def test_precondition_failure_exit_code(capsys):
    status, [rec] = records(capsys, ["four-factor", "a1", "--json"])
    assert status == 1 and rec["error"]["kind"] == "precondition"
    status, _ = records(capsys, ["dual", "ex2_7", "--json"])
    assert status == 1


def test_truncate_flag(capsys):
    status, [rec] = records(capsys, ["hilbert", "ex2_7", "--truncate", "4", "--json"])
    assert status == 0 and rec["result"]["hilbert"] == [1, 0, 1, 0, 1]


def test_fixtures_dir_flag(tmp_path, capsys):
    (tmp_path / "mine.ghopf").write_text((DATA / "gf3_exterior.ghopf").read_text())
    status, [rec] = records(capsys, ["verify", "mine", "--fixtures-dir", str(tmp_path), "--json"])
    assert status == 0 and rec["result"]["dim"] == 6


def test_multiple_inputs_give_one_record_each(capsys):
    status, recs = records(capsys, ["hilbert", "a1", "d_variety", "--json"])
    assert status == 0 and [r["input"] for r in recs] == ["a1", "d_variety"]


@pytest.mark.parametrize("command", COMMANDS)
def test_structured_output_is_byte_identical_on_repeat(command):
    req = CommandRequest(command, ["c_ex53"], ring="gf4_b2")
    first = [r.to_json() for r in run(req)]
    second = [r.to_json() for r in run(req)]
    assert first == second


@pytest.mark.parametrize("command", [c for c in COMMANDS if c != "points"])
def test_every_command_runs_on_every_fixture(command):
    for name in FIXTURE_NAMES:
        rec = run_one(CommandRequest(command, [name]), name)
        # truncated and non-cocommutative inputs are refused with a precondition record, never a crash
        assert rec.status in (0, 1), rec.to_text()
        if rec.status == 1:
            assert rec.error and rec.error["kind"] == "precondition", rec.to_text()


def test_unknown_command_request():
    with pytest.raises(ValueError):
        CommandRequest("frobnicate", ["a1"])


def test_resolve_input():
    assert resolve_input("a1").name == "a1.ghopf"
    assert resolve_input("fixtures/a1.ghopf").name == "a1.ghopf"
    assert resolve_input("gf4").parent.name == "rings"


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "grhopf", "verify", "a1", "--json"], capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout)["ok"]
