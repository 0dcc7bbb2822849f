import asyncio
import traceback as _traceback
from typing import List
from pentaflip.utils.async_app import AsyncApp
from pentaflip.verification.check import ICheck, ICheckSuite
from pentaflip.verification.logger import Logger, LogLevel
from pentaflip.verification.result import CheckResult, CheckResults


class CheckRunner(AsyncApp[CheckResults]):
    def __init__(self, suites: List[ICheckSuite]) -> None:
        self._suites = suites

    async def main(self) -> CheckResults:
        checks = self._checks_from_suites(self._suites)
        results = await asyncio.gather(*[self._run_check(check) for check in checks])
        return CheckResults(list(results))

    def _checks_from_suites(self, suites: List[ICheckSuite]) -> List[ICheck]:
        return [check for suite in suites for check in suite.checks()]

    async def _run_check(self, check: ICheck) -> CheckResult:
        logger = Logger()
        try:
            await asyncio.get_running_loop().run_in_executor(None, check.run, logger)
        except Exception:
            logger.log(LogLevel.FATAL, "Exception: " + _traceback.format_exc())
        return CheckResult(check_name=check.name(), log=logger)


def run_suites(suites: List[ICheckSuite]) -> CheckResults:
    return CheckRunner(suites).start()
