import json
from pathlib import Path

import pytest

from signedcolor.cli import main

FIXTURES = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, "--format", "json", *argv)
    return code, json.loads(out) if out else None, err


def test_chromatic_unbalanced_c4(capsys):
    code, data, _ = run_json(capsys, "chromatic", str(FIXTURES / "unbalanced_c4.sg"))
    assert code == 0
    assert data["chi_pm"] == 3
    assert set(int(c) for c in data["coloring"].values()) <= {0, 1, -1}


def test_chromatic_text_output(capsys):
    code, out, _ = run(capsys, "chromatic", str(FIXTURES / "unbalanced_c4.sg"))
    assert code == 0
    assert "chi_pm = 3" in out


def test_analyze(capsys):
    code, data, _ = run_json(capsys, "analyze", str(FIXTURES / "unbalanced_c4.sg"))
    assert code == 0
    assert data["coloring_number"] == 3
    assert data["balanced"]["holds"] is False
    assert data["antibalanced"]["holds"] is False
    assert data["blocks"][0]["class"] == "unbalanced even cycle"


def test_choosable_not_degree_choosable_path(capsys):
    code, data, _ = run_json(capsys, "choosable", str(FIXTURES / "pos_path3.sg"))
    assert code == 0
    assert data["degree_choosable"] is False
    assert data["uncolorable_lists"] == {"0": [1], "1": [1, 2], "2": [2]}


def test_badlists(capsys):
    code, data, _ = run_json(capsys, "badlists", str(FIXTURES / "pos_path3.sg"))
    assert code == 0
    assert data["lists"] == {"0": [1], "1": [1, 2], "2": [2]}


def test_listcolor(capsys, tmp_path):
    code, data, _ = run_json(
        capsys,
        "listcolor",
        str(FIXTURES / "unbalanced_c4.sg"),
        "--lists",
        str(FIXTURES / "c4_lists.l"),
    )
    assert code == 0
    assert data["colorable"] is False


def test_linegraph_round_trips(capsys):
    code, data, _ = run_json(capsys, "linegraph", str(FIXTURES / "pos_path3.sg"))
    assert code == 0
    assert data["vertices"] == 2
    assert data["edges"] == [[0, 1, 1]]


def test_verify_suite_passes(capsys):
    code, data, _ = run_json(capsys, "verify", "S2", "--max-n", "3")
    assert code == 0
    assert data["status"] == "pass"
    assert data["instances"] > 0


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "S99")
    assert code == 1 and "unknown suite" in err


def test_input_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.sg"
    bad.write_text("n 2\ne 0 0 +\n")
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 1
    assert "line 2" in err


def test_missing_file(capsys):
    code, _, err = run(capsys, "analyze", "no_such_file.sg")
    assert code == 1


def test_json_and_text_carry_same_data(capsys):
    code, data, _ = run_json(capsys, "analyze", str(FIXTURES / "balanced_k4.sg"))
    code2, text, _ = run(capsys, "analyze", str(FIXTURES / "balanced_k4.sg"))
    assert code == code2 == 0
    for key in data:
        assert key in text
