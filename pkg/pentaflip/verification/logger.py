from typing import Any, Dict, List, Union
import attr
from functools import reduce
from enum import Enum


class LogLevel(Enum):
    DEBUG = 0
    INFO = 1
    # a statement that held only because nothing satisfied its hypotheses
    VACUOUS = 2
    WARNING = 3
    ERROR = 4
    FATAL = 5

    def to_string(self) -> str:
        return {
            LogLevel.DEBUG: "DEBUG",
            LogLevel.INFO: "INFO",
            LogLevel.VACUOUS: "VACUOUS",
            LogLevel.WARNING: "WARNING",
            LogLevel.ERROR: "ERROR",
            LogLevel.FATAL: "FATAL",
        }[self]


Metric = Union[int, float, str, bool]


@attr.s(auto_attribs=True)
class LogEntry(object):
    level: LogLevel = LogLevel.INFO
    message: str = ""

    def to_string(self) -> str:
        return "[%s] %s" % (self.level.to_string(), self.message)

    def to_json(self) -> Dict[str, str]:
        return {"level": self.level.to_string(), "message": self.message}


class Logger(object):
    def __init__(self) -> None:
        self._log: List[LogEntry] = []
        self._metrics: Dict[str, Metric] = {}

    def log(self, level: LogLevel, message: str) -> None:
        self._log.append(LogEntry(level=level, message=message))

    def debug(self, message: str) -> None:
        self.log(LogLevel.DEBUG, message)

    def info(self, message: str) -> None:
        self.log(LogLevel.INFO, message)

    def error(self, message: str) -> None:
        self.log(LogLevel.ERROR, message)

    def expect(self, condition: bool, message: str) -> bool:
        """Log message as INFO if condition holds, as ERROR otherwise."""
        self.log(LogLevel.INFO if condition else LogLevel.ERROR, message)
        return condition

    def record(self, name: str, value: Metric) -> None:
        self._metrics[name] = value

    def metrics(self) -> Dict[str, Metric]:
        return dict(self._metrics)

    def contains_entry_with_level(self, level: LogLevel) -> bool:
        filtered = [entry for entry in self._log if entry.level == level]
        return len(filtered) != 0

    def to_string(self, min_level: LogLevel = LogLevel.DEBUG) -> str:
        shown = [entry for entry in self._log if entry.level.value >= min_level.value]
        return reduce(lambda s, i: s + i.to_string() + "\n", shown, "")

    def to_json(self) -> List[Dict[str, Any]]:
        return [entry.to_json() for entry in self._log]
