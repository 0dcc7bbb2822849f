from abc import ABCMeta, abstractmethod
from typing import Iterable
from pentaflip.verification.logger import Logger


class ICheck(object, metaclass=ABCMeta):
    # checks are CPU bound and run on an executor thread
    @abstractmethod
    def run(self, logger: Logger) -> None: ...

    @abstractmethod
    def name(self) -> str: ...


class ICheckSuite(object, metaclass=ABCMeta):
    @abstractmethod
    def checks(self) -> Iterable[ICheck]: ...
