from __future__ import annotations

import argparse
import math

from plankforge.bounds.types import BoundKind
from plankforge.polynomials.serialization import try_parse_field
from plankforge.spaces.types import SpaceSpec

SPACE_SPEC_FORMAT = 'lp:p=<float|inf>,d=<int>,field=<real|complex>'
SPACE_SPEC_KEYS = frozenset({'p', 'd', 'field'})


def try_parse_space_spec(raw_value: str) -> tuple[bool, SpaceSpec | None]:
    text = raw_value.strip().lower()
    if not text.startswith('lp:'):
        return False, None

    values = {}
    for item in text[3:].split(','):
        key, separator, value = item.partition('=')
        key = key.strip()
        if not separator or key not in SPACE_SPEC_KEYS or key in values:
            return False, None
        values[key] = value.strip()
    if set(values) != SPACE_SPEC_KEYS:
        return False, None

    parsed, field = try_parse_field(values['field'])
    if not parsed:
        return False, None
    try:
        p = float(values['p'])
        d = int(values['d'])
        if math.isnan(p):
            return False, None
        return True, SpaceSpec(field, d, p)
    except ValueError:
        return False, None


def parse_space_spec(raw_value: str) -> SpaceSpec:
    parsed, space = try_parse_space_spec(raw_value)
    if not parsed:
        raise argparse.ArgumentTypeError(f'invalid space {raw_value!r}; expected {SPACE_SPEC_FORMAT}')
    return space


def parse_int_list(raw_value: str) -> tuple[int, ...]:
    try:
        values = tuple(int(item) for item in raw_value.split(','))
    except ValueError:
        raise argparse.ArgumentTypeError(f'invalid integer list {raw_value!r}') from None
    return values


def parse_float_list(raw_value: str) -> tuple[float, ...]:
    try:
        values = tuple(float(item) for item in raw_value.split(','))
    except ValueError:
        raise argparse.ArgumentTypeError(f'invalid number list {raw_value!r}') from None
    if any(math.isnan(value) for value in values):
        raise argparse.ArgumentTypeError(f'invalid number list {raw_value!r}')
    return values


def parse_range(raw_value: str) -> tuple[int, ...]:
    """'lo..hi' (inclusive) or a comma-separated list of integers."""
    if '..' not in raw_value:
        return parse_int_list(raw_value)

    low, _, high = raw_value.partition('..')
    try:
        start, stop = int(low), int(high)
    except ValueError:
        raise argparse.ArgumentTypeError(f'invalid range {raw_value!r}') from None
    if start > stop:
        raise argparse.ArgumentTypeError(f'empty range {raw_value!r}')
    return tuple(range(start, stop + 1))


def parse_kind_list(raw_value: str) -> tuple[BoundKind, ...]:
    try:
        return tuple(BoundKind(item.strip()) for item in raw_value.split(','))
    except ValueError:
        raise argparse.ArgumentTypeError(f'invalid bound kinds {raw_value!r}') from None
