from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from typing import TextIO


class OutputFormat(Enum):
    JSON = 'json'
    CSV = 'csv'


@dataclass(frozen=True, slots=True)
class Report:
    header: dict[str, object]
    command: str
    status: str
    result: dict[str, object]
    rows: tuple[dict[str, object], ...] = field(default_factory=tuple)


class ReportWriter(ABC):
    output_format: OutputFormat

    @abstractmethod
    def write(self, report: Report, stream: TextIO) -> None:
        raise NotImplementedError
