from enum import Enum
import attr
from typing import Any, Dict, List
from pentaflip.verification.logger import Logger, LogLevel


class CheckStatus(Enum):
    SUCCESS = 1
    VACUOUS = 2
    FAILURE = 3
    FATAL = 4

    def to_string(self) -> str:
        return {
            CheckStatus.SUCCESS: "SUCCESS",
            CheckStatus.VACUOUS: "VACUOUS",
            CheckStatus.FAILURE: "FAILURE",
            CheckStatus.FATAL: "FATAL",
        }[self]


@attr.s(auto_attribs=True)
class CheckResult(object):
    check_name: str
    log: Logger

    def status(self) -> CheckStatus:
        if self.log.contains_entry_with_level(LogLevel.FATAL):
            return CheckStatus.FATAL
        elif self.log.contains_entry_with_level(LogLevel.ERROR):
            return CheckStatus.FAILURE
        elif self.log.contains_entry_with_level(LogLevel.VACUOUS) and \
                not self.log.contains_entry_with_level(LogLevel.INFO):
            return CheckStatus.VACUOUS
        else:
            return CheckStatus.SUCCESS

    def to_json(self) -> Dict[str, Any]:
        return {
            "name": self.check_name,
            "status": self.status().to_string(),
            "metrics": self.log.metrics(),
            "log": self.log.to_json(),
        }

    def to_string(self) -> str:
        return "-------------------------\n" \
               "Detailed result for:\n" \
               "[%s] %s\n" \
               "-------------------------\n" \
               "%s\n" % (self.status().to_string(), self.check_name, self.log.to_string(LogLevel.INFO))


class CheckResults(object):
    def __init__(self, results: List[CheckResult]) -> None:
        self._results = results

    def results(self) -> List[CheckResult]:
        return list(self._results)

    def status(self) -> CheckStatus:
        statuses = [r.status() for r in self._results]
        for status in (CheckStatus.FATAL, CheckStatus.FAILURE):
            if status in statuses:
                return status
        return CheckStatus.SUCCESS

    def exit_code(self) -> int:
        return 0 if self.status() == CheckStatus.SUCCESS else 1

    def to_json(self) -> Dict[str, Any]:
        return {
            "status": self.status().to_string(),
            "checks": [r.to_json() for r in self._results],
        }

    def to_string(self) -> str:
        text = "-------------------------\n" \
               "Summary\n" \
               "-------------------------\n"
        for result in self._results:
            text += "[%s] %s\n" % (result.status().to_string(), result.check_name)
        text += "\n"
        for fatalled in [r for r in self._results if r.status() == CheckStatus.FATAL]:
            text += fatalled.to_string()
        for failed in [r for r in self._results if r.status() == CheckStatus.FAILURE]:
            text += failed.to_string()
        return text
