from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class CommandStatus(Enum):
    OK = 'ok'
    CHECK_FAILED = 'check-failed'


@dataclass(frozen=True, slots=True)
class CommandResult:
    command: str
    payload: dict[str, object]
    status: CommandStatus = CommandStatus.OK
    rows: tuple[dict[str, object], ...] = field(default_factory=tuple)

    @classmethod
    def checked(cls, command: str, payload: dict[str, object], passed: bool) -> CommandResult:
        return cls(command, payload, CommandStatus.OK if passed else CommandStatus.CHECK_FAILED)
