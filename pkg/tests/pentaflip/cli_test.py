import json
from pathlib import Path
from typing import List
from click.testing import CliRunner, Result
from pentaflip.cli import cli
from pentaflip.ptolemy_action import dump_state, pentagon_fan_state


_CYCLE = "d(1,3,4,5) d(1,2,3,5) d(2,3,4,5) d(1,2,4,5) d(1,2,3,4)"
_FAN_VALUES = ["a=1", "b=1", "c=1", "d=1", "e=1", "x=2", "y=2"]


def _invoke(args: List[str]) -> Result:
    return CliRunner().invoke(cli, args)


def _state_file(tmp_path: Path) -> str:
    path = tmp_path / "pentagon.json"
    path.write_text(dump_state(pentagon_fan_state()))
    return str(path)


def test_flip_cycle_word(tmp_path: Path) -> None:
    result = _invoke(["flip", _state_file(tmp_path), _CYCLE])
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["identity"] is True
    assert report["final"]["labels"]["1-3"] == "x"
    assert report["final"]["labels"]["1-4"] == "y"
    assert report["steps"][0]["label"] == "(c*e + d*x)/y"


def test_flip_text_format(tmp_path: Path) -> None:
    result = _invoke(["flip", _state_file(tmp_path), _CYCLE, "--format", "text"])
    assert result.exit_code == 0
    assert result.output.endswith("identity: true\n")


def test_flip_empty_word(tmp_path: Path) -> None:
    result = _invoke(["flip", _state_file(tmp_path)])
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["final"] == report["initial"]
    assert report["steps"] == []


def test_flip_inapplicable_under_abort(tmp_path: Path) -> None:
    result = _invoke(["flip", _state_file(tmp_path), "d(1,2,3,5)", "--policy", "abort"])
    assert result.exit_code == 3
    assert "Error:" in result.output


def test_flip_inapplicable_is_skipped(tmp_path: Path) -> None:
    result = _invoke(["flip", _state_file(tmp_path), "d(1,2,3,5)"])
    assert result.exit_code == 0
    assert json.loads(result.output)["steps"][0]["applied"] is False


def test_flip_bad_word(tmp_path: Path) -> None:
    result = _invoke(["flip", _state_file(tmp_path), "d(1,2,3)"])
    assert result.exit_code == 2
    assert "position 0" in result.output


def test_flip_bad_state(tmp_path: Path) -> None:
    path = tmp_path / "broken.json"
    path.write_text('{"n": 5, "diagonals": [[1, 3], [2, 4]], "labels": {}}')
    assert _invoke(["flip", str(path), ""]).exit_code == 2


def test_flip_to_file(tmp_path: Path) -> None:
    out = tmp_path / "report.json"
    result = _invoke(["flip", _state_file(tmp_path), _CYCLE, "--out", str(out)])
    assert result.exit_code == 0
    assert result.output == ""
    assert json.loads(out.read_text())["identity"] is True


def test_verify_pentagon_cycle() -> None:
    result = _invoke(["verify", "lemma1"])
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["status"] == "SUCCESS"
    assert report["config"]["command"] == "lemma1"


def test_verify_matrix_pentagon_text() -> None:
    result = _invoke(["verify", "matrix-pentagon", "--format", "text"])
    assert result.exit_code == 0
    assert "[SUCCESS] MatrixPentagonChecks.transcribed_product" in result.output


def test_verify_gamma_relations() -> None:
    assert _invoke(["verify", "gamma-relations", "--n", "5"]).exit_code == 0


def test_verify_path_independence() -> None:
    assert _invoke(["verify", "path-independence", "--n", "5"]).exit_code == 0


def test_verify_randomized_needs_seed() -> None:
    result = _invoke(["verify", "laurent"])
    assert result.exit_code == 2
    assert "--seed" in result.output


def test_verify_laurent_is_reproducible() -> None:
    args = ["verify", "laurent", "--n", "6", "--len", "6", "--trials", "3", "--seed", "7"]
    first = _invoke(args)
    second = _invoke(args)
    assert first.exit_code == 0
    assert first.output == second.output


def test_verify_oracle_crosscheck() -> None:
    result = _invoke(["verify", "oracle-crosscheck", "--seed", "1", "--trials", "5"])
    assert result.exit_code == 0
    assert json.loads(result.output)["config"]["seed"] == 1


def test_verify_rejects_out_of_range_n() -> None:
    assert _invoke(["verify", "gamma-relations", "--n", "13"]).exit_code == 2
    assert _invoke(["verify", "gamma-relations", "--n", "3"]).exit_code == 2


def test_verify_unknown_target() -> None:
    assert _invoke(["verify", "nonsense"]).exit_code == 2


def test_flipgraph_json() -> None:
    result = _invoke(["flipgraph", "--n", "5"])
    assert result.exit_code == 0
    assert len(json.loads(result.output)["vertices"]) == 5


def test_flipgraph_square() -> None:
    result = _invoke(["flipgraph", "--n", "4"])
    assert json.loads(result.output)["vertices"] == ["1-3", "2-4"]


def test_flipgraph_dot() -> None:
    result = _invoke(["flipgraph", "--n", "6", "--format", "dot"])
    assert result.exit_code == 0
    assert len([line for line in result.output.splitlines() if " -- " in line]) == 21


def test_flipgraph_bounds() -> None:
    assert _invoke(["flipgraph", "--n", "13"]).exit_code == 2
    assert _invoke(["flipgraph", "--n", "2"]).exit_code == 2
    assert _invoke(["flipgraph", "--n", "9", "--max-n", "8"]).exit_code == 2


def test_hyperbolic_realize(tmp_path: Path) -> None:
    args = ["hyperbolic", "realize", _state_file(tmp_path)]
    for value in _FAN_VALUES:
        args += ["--assign", value]
    result = _invoke(args)
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["polygon"]["labels"] == [1, 2, 3, 4, 5]
    assert report["roundtrip_error"] < 1e-9


def test_hyperbolic_realize_needs_values(tmp_path: Path) -> None:
    assert _invoke(["hyperbolic", "realize", _state_file(tmp_path)]).exit_code == 2
    assert _invoke(["hyperbolic", "realize", _state_file(tmp_path), "--assign", "a=1"]).exit_code == 2
    assert _invoke(["hyperbolic", "realize", _state_file(tmp_path), "--assign", "a"]).exit_code == 2


def test_hyperbolic_realize_random(tmp_path: Path) -> None:
    assert _invoke(["hyperbolic", "realize", _state_file(tmp_path), "--seed", "3"]).exit_code == 0


def test_hyperbolic_check() -> None:
    assert _invoke(["hyperbolic", "check", "--seed", "1", "--trials", "10"]).exit_code == 0
    assert _invoke(["hyperbolic", "check"]).exit_code == 2


def test_hyperbolic_crosscheck() -> None:
    result = _invoke(["hyperbolic", "crosscheck", "--seed", "1", "--trials", "5", "--format", "text"])
    assert result.exit_code == 0
    assert "[SUCCESS] OracleCrosscheckChecks" in result.output
