from __future__ import annotations

import dataclasses
import math
from enum import Enum
from pathlib import Path

import numpy as np

from plankforge import __version__
from plankforge.commands.types import CommandResult
from plankforge.polynomials.serialization import polynomial_to_dict
from plankforge.polynomials.types import Polynomial
from .types import Report


def to_jsonable(value: object) -> object:
    """Plain JSON values; complex numbers become [re, im] and non-finite floats become strings."""
    if isinstance(value, Polynomial):
        return to_jsonable(polynomial_to_dict(value))
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, np.generic):
        return to_jsonable(value.item())
    if isinstance(value, float):
        return value if math.isfinite(value) else repr(value)
    if isinstance(value, complex):
        return [to_jsonable(value.real), to_jsonable(value.imag)]
    if isinstance(value, Path):
        return str(value)
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {item.name: to_jsonable(getattr(value, item.name)) for item in dataclasses.fields(value)}
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [to_jsonable(item) for item in value]
    raise TypeError(f'cannot serialize {type(value).__name__}')


class ReportBuilder:
    def __init__(self, version: str = __version__) -> None:
        self._version = version

    def build(self, result: CommandResult, config: dict[str, object], seed: int) -> Report:
        return Report(
            header={'plankforge_version': self._version, 'seed': seed, 'config': to_jsonable(config)},
            command=result.command,
            status=result.status.value,
            result=to_jsonable(result.payload),
            rows=tuple(to_jsonable(row) for row in result.rows),
        )
