import sys
import traceback as _traceback
from types import TracebackType
from typing import Optional, Type
from pentaflip.cli import cli


def _on_uncaught_exception(type_: Type[BaseException], value: BaseException,
                           traceback: Optional[TracebackType]) -> None:
    exception_msg = ''.join(_traceback.format_exception_only(type_, value))
    full_traceback_msg = ''.join(_traceback.format_exception(type_, value, traceback, chain=True))
    print(exception_msg + "\n" + full_traceback_msg, file=sys.stderr)


def setup_uncaught_exception_handler() -> None:
    sys.excepthook = _on_uncaught_exception


def main() -> None:
    setup_uncaught_exception_handler()
    cli(prog_name='pentaflip')


if __name__ == '__main__':
    main()
