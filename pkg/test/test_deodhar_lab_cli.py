# python
#
# This file is part of the deodharLab distribution.
# Copyright (c) 2025 Oliver Albold.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, version 3.
#
# This program is distributed in the hope that it will be useful, but
# WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the GNU
# General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program. If not, see <http://www.gnu.org/licenses/>.
#
"""
Tests of the command line front end and its ini file

The tests run the commands in process through DeodharLabCli.run() and
compare stdout and the exit status.
"""

import io
import json
import os
import sys

import pytest

# import test object
sys.path.append(os.path.abspath("./"))
import deodhar_lab_cli as DLC  # pylint: disable=wrong-import-position
from deodhar_lab import base_lab  # pylint: disable=wrong-import-position
from deodhar_lab import diagram_io as DIO  # pylint: disable=wrong-import-position

#
# global constants
#
RUNNING = "3,6:+++/+*+/++o"
RUNNING_FILE = "test/golden/running.json"


def run(capsys, *argv):
    """(exit status, stdout) of one command"""
    cli = DLC.DeodharLabCli(DLC.CONFIG_FILE)
    status = cli.run(list(argv))
    return status, capsys.readouterr().out


def test_config_file():
    """The shipped ini file exists and sets the defaults"""
    assert os.path.exists(DLC.CONFIG_FILE)
    cli = DLC.DeodharLabCli(DLC.CONFIG_FILE)
    assert cli.seed == 2024
    assert cli.reading == "row"
    assert cli.field_name == "rat"
    assert cli.guards["maxClosureCells"] == 9


def test_missing_config_file_keeps_defaults():
    """A missing ini file is logged and the defaults stay"""
    lab = base_lab.BaseLab("does_not_exist.ini")
    assert lab.guards == base_lab.DEFAULT_GUARDS
    assert lab.reading == "row"


def test_guard_environment(monkeypatch, capsys):
    """DEODHAR_LAB_GUARD overrides the cell guards"""
    monkeypatch.setenv(base_lab.GUARD_ENV, "4")
    cli = DLC.DeodharLabCli(DLC.CONFIG_FILE)
    assert cli.guards["maxEnumerateCells"] == 4
    assert cli.guards["maxCensusN"] == 8
    status = cli.run(["enumerate", "--k", "3", "--n", "6", "--parts", "3,3,3"])
    assert status == DLC.EXIT_DOMAIN_ERROR
    assert "guard" in capsys.readouterr().err


def test_census(capsys):
    """Gr(2,4) point count in compact text"""
    status, out = run(capsys, "census", "--n", "4", "--k", "2")
    assert status == DLC.EXIT_OK
    assert out == "q^4+q^3+2q^2+q+1  OK\n"
    status, out = run(capsys, "--format", "json", "census", "--n", "3", "--k", "1")
    assert json.loads(out) == {"expected": "q^2+q+1", "ok": True, "total": "q^2+q+1"}


def test_classify(capsys):
    """Go, Le and NotGo inputs"""
    assert run(capsys, "classify", "--inline", RUNNING) == (0, "Go\n+++\n+*+\n++o\n")
    assert run(capsys, "classify", "--inline", "2,4:ee/ee") == (0, "Le\n++\n++\n")
    assert run(capsys, "classify", "--inline", "2,4:ee/ex") == (0, "NotGo at 0,0\n")
    status, out = run(capsys, "--format", "json", "classify", "--inline", "2,4:ee/ex")
    assert status == 0
    assert json.loads(out) == {"kind": "NotGo", "witness": [0, 0]}


def test_classify_from_file_and_stdin(monkeypatch, capsys):
    """--in reads files and '-' reads stdin"""
    assert run(capsys, "classify", "--in", RUNNING_FILE) == (0, "Go\n+++\n+*+\n++o\n")
    monkeypatch.setattr(sys, "stdin", io.StringIO(RUNNING + "\n"))
    assert run(capsys, "classify", "--in", "-") == (0, "Go\n+++\n+*+\n++o\n")


def test_domain_errors(capsys):
    """Wrong stones, missing files and guards exit with status 1"""
    assert run(capsys, "classify", "--inline", "3,6:+++/++*/++o")[0] == DLC.EXIT_DOMAIN_ERROR
    assert run(capsys, "classify", "--in", "no/such/file.json")[0] == DLC.EXIT_DOMAIN_ERROR
    assert run(capsys, "census", "--n", "9", "--k", "3")[0] == DLC.EXIT_DOMAIN_ERROR
    assert run(capsys, "closure-check", "--inline", RUNNING)[0] == DLC.EXIT_DOMAIN_ERROR
    assert run(capsys, "--field", "q4", "census", "--n", "2", "--k", "1")[0] == DLC.EXIT_DOMAIN_ERROR


def test_usage_errors(capsys):
    """Unknown commands and missing options exit with status 2"""
    assert DLC.DeodharLabCli(DLC.CONFIG_FILE).run(["bogus"]) == DLC.EXIT_USAGE
    assert DLC.DeodharLabCli(DLC.CONFIG_FILE).run([]) == DLC.EXIT_USAGE
    assert DLC.DeodharLabCli(DLC.CONFIG_FILE).run(["census", "--n", "4"]) == DLC.EXIT_USAGE
    assert DLC.DeodharLabCli(DLC.CONFIG_FILE).run(["--help"]) == DLC.EXIT_OK
    capsys.readouterr()


def test_trace(capsys):
    """Permutation and boundary labels of the running example"""
    status, out = run(capsys, "trace", "--inline", RUNNING)
    lines = out.splitlines()
    assert status == 0
    assert lines[0] == "pi = 123456"
    assert lines[1] == "north = [3, 2, 1]"
    assert lines[2] == "west = [4, 5, 6]"
    assert "1,1: D sigma=(4, 3)" in lines


def test_weights_and_plucker(capsys):
    """R_D rows and a Plücker coordinate of the running example"""
    status, out = run(capsys, "weights", "--inline", RUNNING)
    lines = out.splitlines()
    assert status == 0
    assert lines[0] == "R_D"
    assert lines[1] == "[b7*b8*b9, b8*b9 + b4, b5 + b9, 1, 0, 0]"
    assert run(capsys, "plucker", "--inline", RUNNING, "--I", "4,5,6", "--method", "toggle") == (0, "1\n")
    assert run(capsys, "plucker", "--inline", RUNNING, "--I", "3,5,6") == (0, "b5 + b9\n")


def test_random_weights_over_prime_field(capsys):
    """--random with --field evaluates in F_7"""
    status, out = run(capsys, "--field", "q7", "--seed", "3", "weights", "--inline", RUNNING, "--random")
    again = run(capsys, "--field", "q7", "--seed", "3", "weights", "--inline", RUNNING, "--random")[1]
    assert status == 0
    assert out == again
    assert "b" not in out.splitlines()[1]


def test_closure_check(capsys):
    """Identity case and general entry point on the running example"""
    assert run(capsys, "closure-check", "--inline", RUNNING, "--pair", "2,2:1,1", "--identity") == (0, "OK\n")
    assert run(capsys, "closure-check", "--inline", RUNNING, "--pair", "2,2:1,1") == (0, "OK\n")
    status, out = run(capsys, "--format", "json", "closure-check", "--in", RUNNING_FILE, "--pair", "2,2:1,1", "--trace")
    data = json.loads(out)
    assert status == 0
    assert data["ok"] is True
    assert data["trace"]


def test_closure_check_passes_the_reading_order(monkeypatch, capsys):
    """--reading reaches the general closure entry point"""
    kinds = []

    def fake_general(d_prime, c, c_prime, kind="row", check=True, record=False):  # pylint: disable=unused-argument
        kinds.append(kind)
        return DLC.closure.ClosureReport(True)

    monkeypatch.setattr(DLC.closure, "verify_closure_general", fake_general)
    assert run(capsys, "--reading", "col", "closure-check", "--inline", RUNNING, "--pair", "2,2:1,1") == (0, "OK\n")
    assert run(capsys, "closure-check", "--inline", RUNNING, "--pair", "2,2:1,1") == (0, "OK\n")
    assert kinds == ["col", "row"]


def test_signal_term_handler(monkeypatch):
    """SIGTERM exits cleanly with or without a bound front end"""
    monkeypatch.setattr(DLC, "CLI", None)
    with pytest.raises(SystemExit) as stop:
        DLC.signal_term_handler(15, None)
    assert stop.value.code == 0
    cli = DLC.lab_cli()
    assert DLC.CLI is cli
    with pytest.raises(SystemExit):
        DLC.signal_term_handler(15, None)


def test_exploratory_scan_is_labelled(capsys):
    """The scan prints the heuristic note first"""
    status, out = run(capsys, "closure-check", "--inline", "2,4:ee/ee", "--exploratory", "conj1", "--include-adjacent")
    assert status == 0
    assert out.splitlines()[0] == "# heuristic evidence from Plücker vanishing patterns, not a proof"


def test_enumerate_and_toggles(capsys):
    """Le-diagram count of Gr(1,3) and the toggle graph summary"""
    status, out = run(capsys, "enumerate", "--k", "1", "--n", "3", "--kind", "le")
    assert status == 0
    assert out.splitlines()[0] == "7 diagrams"
    status, out = run(capsys, "toggles", "--inline", "1,2:+")
    assert status == 0
    assert out.splitlines()[0] == "2 restricted diagrams, 1 toggle moves"


def test_render_json_round_trip(capsys, tmp_path):
    """render --format json writes a file that reads back to the same filling"""
    target = tmp_path / "running.json"
    status, out = run(capsys, "--format", "json", "--out", str(target), "render", "--inline", RUNNING)
    assert status == 0
    assert out == ""
    assert DIO.load_filling(str(target)) == DIO.parse_inline(RUNNING)


def test_compact():
    """Spaces and multiplication signs are dropped"""
    assert DLC.compact("q^4 + 2*q^2 - 1") == "q^4+2q^2-1"
