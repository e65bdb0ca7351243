from __future__ import annotations

from .handler import CommandHandler
from .requests import CommandRequest


class HandlerRegistry:
    def __init__(self) -> None:
        self._by_request_type: dict[type[CommandRequest], CommandHandler] = {}

    def register(self, handler: CommandHandler) -> None:
        request_type = handler.request_type
        if request_type in self._by_request_type:
            raise ValueError(f'Handler already registered for {request_type.__name__}')
        self._by_request_type[request_type] = handler

    def get(self, request_type: type[CommandRequest]) -> CommandHandler:
        try:
            return self._by_request_type[request_type]
        except KeyError as exc:
            raise KeyError(f'No handler registered for {request_type.__name__}') from exc

    def for_request(self, request: CommandRequest) -> CommandHandler:
        return self.get(type(request))

    @property
    def request_types(self) -> tuple[type[CommandRequest], ...]:
        return tuple(self._by_request_type)
