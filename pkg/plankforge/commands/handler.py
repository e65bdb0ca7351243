from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Generic, TypeVar

from .requests import CommandRequest
from .types import CommandResult

RequestT = TypeVar('RequestT', bound=CommandRequest)


class CommandHandler(ABC, Generic[RequestT]):
    request_type: type[RequestT]

    @abstractmethod
    def validate(self, request: RequestT) -> None:
        raise NotImplementedError

    @abstractmethod
    def handle(self, request: RequestT) -> CommandResult:
        raise NotImplementedError
