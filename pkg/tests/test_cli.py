import json
import subprocess
import sys

import pytest

from spinal.cli import main
from spinal.families import GGS, build_recursion, make_special_datum
from spinal.formats import format_datum, parse_gap, same_table


@pytest.fixture
def files(tmp_path, d3):
    paths = {}
    paths["d3"] = tmp_path / "d3.json"
    paths["d3"].write_text(format_datum(d3))
    paths["gs"] = tmp_path / "gs.json"
    paths["gs"].write_text(format_datum(make_special_datum(GGS, 3, (1, 2))))
    paths["bad"] = tmp_path / "bad.json"
    paths["bad"].write_text('{"p": 4, "E": [[], [], [], []]}')
    return {k: str(v) for k, v in paths.items()}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate(capsys, files):
    code, out, _ = run(capsys, "validate", files["d3"])
    assert code == 0 and "p = 3" in out
    code, _, err = run(capsys, "validate", files["bad"])
    assert code == 2 and "error" in err
    code, _, _ = run(capsys, "validate", files["d3"] + ".missing")
    assert code == 2


def test_usage_error_exit_code(files):
    with pytest.raises(SystemExit) as info:
        main(["wp", files["d3"]])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_lift_check(capsys, files):
    code, out, _ = run(capsys, "lift-check", files["d3"], "--json")
    rep = json.loads(out)
    assert code == 0 and rep["liftable_certified"]
    assert rep["witness"]["m"] == 3 and rep["sigma"] == {"a": "b", "c": "c", "b": "a^2 b a"}
    code, out, _ = run(capsys, "lift-check", files["gs"])
    assert code == 1 and "not satisfied" in out


def test_sigma(capsys, files):
    assert run(capsys, "sigma", files["d3"], "--word", "a")[:2] == (0, "b\n")
    assert run(capsys, "sigma", files["d3"], "--word", "a", "--iterate", "2")[:2] == (0, "a^2 b a\n")
    assert run(capsys, "sigma", files["gs"], "--word", "a")[0] == 1
    assert run(capsys, "sigma", files["d3"], "--word", "a ^2")[0] == 2


def test_wp_and_eq(capsys, files):
    assert run(capsys, "wp", files["d3"], "--word", "a a a")[:2] == (0, "trivial\n")
    assert run(capsys, "wp", files["d3"], "--word", "b c")[:2] == (1, "nontrivial\n")
    assert run(capsys, "eq", files["d3"], "--left", "b b", "--right", "b^2")[:2] == (0, "equal\n")
    assert run(capsys, "eq", files["d3"], "--left", "b c", "--right", "c b")[:2] == (1, "distinct\n")


def test_memo_bound_exit_code(capsys, files, monkeypatch):
    monkeypatch.setenv("SPINAL_MAX_MEMO", "1")
    assert run(capsys, "wp", files["d3"], "--word", "b c b c")[0] == 3


def test_warning_is_reported(capsys, files):
    code, out, err = run(capsys, "wp", files["d3"], "--word", "a^3")
    assert code == 0 and "warning" in err


def test_section_and_act(capsys, files):
    assert run(capsys, "section", files["d3"], "--word", "a b", "--vertex", "1")[:2] == (0, "b\n")
    assert run(capsys, "section", files["d3"], "--word", "b", "--vertex", "-")[:2] == (0, "b\n")
    assert run(capsys, "act", files["d3"], "--word", "b", "--on", "012")[:2] == (0, "022\n")
    assert run(capsys, "act", files["d3"], "--word", "a", "--on", "9")[0] == 2


def test_nucleus(capsys, files, tmp_path):
    dot = tmp_path / "n.dot"
    code, out, _ = run(capsys, "nucleus", files["d3"], "--verify-quasinucleus", "2", "--dot", str(dot))
    lines = out.splitlines()
    assert code == 0
    assert sorted(lines[:7]) == sorted(["1", "a", "a^2", "b", "b^2", "c", "c^2"])
    assert lines[7] == "# quasinucleus with k = 2: yes"
    assert dot.read_text().startswith("digraph nucleus")
    assert run(capsys, "nucleus", files["d3"], "--max-size", "3")[0] == 3


def test_portrait(capsys, files):
    assert run(capsys, "portrait", files["d3"], "--word", "a b")[:2] == (0, "(0,1,2)[1, b, a]\n")
    code, out, _ = run(capsys, "portrait", files["d3"], "--word", "a b", "--format", "dot")
    assert code == 0 and out.startswith("digraph portrait")


def test_orbit(capsys, files):
    code, out, _ = run(capsys, "orbit", files["d3"], "--kmax", "2", "--lmax", "3", "--json")
    assert code == 0
    assert json.loads(out) == {"ball": {"K": 2, "L": 3}, "reached": 94, "total": 94,
                               "transitive_on_ball": True, "missed": []}
    code, out, _ = run(capsys, "orbit", files["d3"], "--kmax", "1", "--lmax", "2")
    assert code == 0 and "reached" in out


def test_export_gap(capsys, files, d3):
    code, out, _ = run(capsys, "export-gap", files["d3"])
    assert code == 0
    assert same_table(parse_gap(out, 3), build_recursion(d3))


def test_selftest(capsys, files):
    code, out, _ = run(capsys, "selftest", files["d3"], "--seed", "1", "--samples", "20")
    assert code == 0
    assert out.count("PASS") == 9 and "FAIL" not in out


def test_outputs_are_deterministic(capsys, files):
    first = run(capsys, "selftest", files["d3"], "--seed", "3", "--samples", "10")
    second = run(capsys, "selftest", files["d3"], "--seed", "3", "--samples", "10")
    assert first == second
    assert run(capsys, "nucleus", files["d3"]) == run(capsys, "nucleus", files["d3"])


def test_console_script_entry(files):
    res = subprocess.run([sys.executable, "-m", "spinal.cli", "wp", files["d3"], "--word", "b c"],
                         capture_output=True, text=True)
    assert res.returncode == 1 and res.stdout == "nontrivial\n"
