import json
from typing import Any, Optional
import click


def dump_json(data: Any) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def write_output(text: str, out: Optional[str]) -> None:
    """Write the report to a file, or to stdout when no file is given."""
    if out is None:
        click.echo(text, nl=False)
    else:
        with open(out, "w") as f:
            f.write(text)
