import json
from pathlib import Path
from pentaflip.utils.output import dump_json, write_output


def test_dump_json_is_stable() -> None:
    assert dump_json({"b": 1, "a": [1, 2]}) == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'


def test_write_output_to_file(tmp_path: Path) -> None:
    target = tmp_path / "report.json"
    write_output(dump_json({"identity": True}), str(target))
    assert json.loads(target.read_text()) == {"identity": True}
