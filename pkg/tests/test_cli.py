import json
from pathlib import Path

import pytest

from stirlingsym import cli
from stirlingsym.report import VerificationReport
from stirlingsym.symfunc import SymFunc

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_expand(capsys):
    code, out, _ = run(capsys, "expand", "--n", "2", "--r", "2", "--basis", "m")
    assert code == 0
    assert out == "2*m(2) + 5*m(1,1)\n"


def test_expand_json_roundtrips(capsys):
    code, out, _ = run(
        capsys, "expand", "--n", "3", "--r", "1", "--basis", "e", "--format", "json"
    )
    assert code == 0
    f = SymFunc.from_json(json.loads(out))
    assert f == SymFunc("e", {(3,): 1, (2, 1): 4, (1, 1, 1): 1})


def test_expand_latex(capsys):
    code, out, _ = run(
        capsys, "expand", "--n", "2", "--r", "2", "--basis", "m", "--format", "latex"
    )
    assert out == "2m_{(2)} + 5m_{(1,1)}\n"


def test_eulerian(capsys):
    code, out, _ = run(capsys, "eulerian", "--n", "3", "--r", "2")
    assert code == 0
    assert out == "t + 8*t^2 + 6*t^3\n"


def test_enumerate_words(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "2", "--r", "2")
    assert code == 0
    assert out.splitlines() == ["1122", "1221", "2211"]
    code, out, _ = run(
        capsys, "enumerate", "--n", "2", "--r", "2", "--format", "json"
    )
    assert [json.loads(line) for line in out.splitlines()] == [
        [1, 1, 2, 2],
        [1, 2, 2, 1],
        [2, 2, 1, 1],
    ]


def test_enumerate_trees(capsys):
    code, out, _ = run(
        capsys, "enumerate", "--what", "trees", "--n", "3", "--format", "json"
    )
    assert code == 0
    assert len(out.splitlines()) == 3


def test_verify_single(capsys):
    code, out, _ = run(
        capsys, "verify", "--identity", "thm13", "--order", "4", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "identity": "thm13",
        "order": 4,
        "pass": True,
        "discrepancy": None,
    }


def test_verify_passes_n_to_checks(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "htoe", "--n", "5")
    assert code == 0
    assert "pass" in out


def test_verify_unknown_identity(capsys):
    code, _, err = run(capsys, "verify", "--identity", "nonsense")
    assert code == 2
    assert "unknown identity" in err


def test_verify_reports_failure_with_exit_one(capsys, monkeypatch):
    failing = VerificationReport(
        "fake", {"order": 1}, False, {"location": "y^0", "lhs": "0", "rhs": "1"}
    )
    monkeypatch.setattr(cli, "registry", lambda: {"fake": lambda: failing})
    code, out, _ = run(capsys, "verify", "--identity", "fake")
    assert code == 1
    assert "FAIL" in out
    code, out, _ = run(capsys, "verify", "--identity", "all", "--format", "json")
    assert code == 1
    assert json.loads(out)["pass"] is False


def test_invert(capsys):
    code, out, _ = run(
        capsys, "invert", "--kind", "comp", "--coeffs", "0,1,1,1,1", "--format", "json"
    )
    assert code == 0
    assert json.loads(out) == ["0", "1", "-1", "2", "-6"]
    code, _, err = run(capsys, "invert", "--kind", "mult", "--coeffs", "0,1")
    assert code == 2


def test_wp(capsys):
    code, out, _ = run(capsys, "wp", "--lambda", "2,1")
    assert code == 0
    assert out == "9\n"
    code, out, _ = run(capsys, "wp", "--lambda", "1,1", "--format", "json")
    assert json.loads(out) == {"lambda": [1, 1], "wp": "5"}


def test_mobius(capsys):
    code, out, _ = run(capsys, "mobius", "--poset", "pi", "--n", "3", "--mu", "2,0")
    assert code == 0
    assert out == "2\n"
    code, out, _ = run(
        capsys, "mobius", "--poset", "b", "--n", "2", "--mu", "1,1", "--verify"
    )
    assert code == 0
    assert "pass" in out


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["expand"])  # missing required --n
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        cli.main(["frobnicate"])
    assert info.value.code == 2


def test_output_is_deterministic(capsys):
    first = run(capsys, "expand", "--n", "4", "--r", "2", "--basis", "p")
    second = run(capsys, "expand", "--n", "4", "--r", "2", "--basis", "p")
    assert first == second


def test_tables_match_golden_files(capsys, tmp_path):
    code, out, _ = run(capsys, "tables", "--out", str(tmp_path))
    assert code == 0
    for r in (1, 2):
        produced = (tmp_path / f"expansions_r{r}.txt").read_bytes()
        golden = (GOLDEN / f"expansions_r{r}.txt").read_bytes()
        assert produced == golden


def test_tables_stdout(capsys):
    code, out, _ = run(capsys, "tables", "--nmax", "2")
    assert code == 0
    assert "type-sum expansions for r=1" in out
    assert "2*m(2) + 5*m(1,1)" in out
