from abc import ABCMeta, abstractmethod
from typing import Generic, TypeVar
import asyncio


T = TypeVar('T')


class AsyncApp(Generic[T], metaclass=ABCMeta):
    @abstractmethod
    async def main(self) -> T: ...

    def start(self) -> T:
        event_loop = asyncio.new_event_loop()
        try:
            return event_loop.run_until_complete(self.main())
        finally:
            event_loop.close()
