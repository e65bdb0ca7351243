from __future__ import annotations

import os
from collections.abc import Mapping
from dataclasses import dataclass, field
from pathlib import Path

from plankforge.reporting.types import OutputFormat

SEED_ENV_VAR = 'PLANKFORGE_SEED'
COMMON_OPTIONS = frozenset({'command', 'seed', 'threads', 'out', 'format', 'verbose'})


def resolve_seed(flag: int | None, environ: Mapping[str, str] | None = None) -> int:
    if flag is not None:
        return flag
    environ = os.environ if environ is None else environ
    raw_value = environ.get(SEED_ENV_VAR, '').strip()
    if not raw_value:
        return 0
    try:
        return int(raw_value)
    except ValueError:
        raise ValueError(f'{SEED_ENV_VAR} must be an integer, got {raw_value!r}') from None


def resolve_output_format(flag: str | None, command: str, action: str | None = None) -> OutputFormat:
    if flag is not None:
        return OutputFormat(flag)
    if command == 'constants' and action == 'sweep':
        return OutputFormat.CSV
    return OutputFormat.JSON


def resolve_threads(flag: int | None) -> int:
    if flag is not None:
        if flag < 1:
            raise ValueError('threads must be >= 1')
        return flag
    return os.cpu_count() or 1


@dataclass(frozen=True, slots=True)
class RunConfig:
    command: str
    seed: int
    threads: int
    output: Path | None = None
    output_format: OutputFormat = OutputFormat.JSON
    options: dict[str, object] = field(default_factory=dict)

    @classmethod
    def from_args(cls, args, environ: Mapping[str, str] | None = None) -> RunConfig:
        options = {key: value for key, value in sorted(vars(args).items()) if key not in COMMON_OPTIONS}
        return cls(
            command=args.command,
            seed=resolve_seed(args.seed, environ),
            threads=resolve_threads(args.threads),
            output=args.out,
            output_format=resolve_output_format(args.format, args.command, getattr(args, 'action', None)),
            options=options,
        )

    def as_dict(self) -> dict[str, object]:
        return {
            'command': self.command,
            'seed': self.seed,
            'threads': self.threads,
            'output': None if self.output is None else str(self.output),
            'format': self.output_format.value,
            'options': self.options,
        }
