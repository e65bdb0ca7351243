from .config import SEED_ENV_VAR, RunConfig, resolve_output_format, resolve_seed, resolve_threads
from .parser import build_parser
from .parsing import (
    SPACE_SPEC_FORMAT,
    parse_float_list,
    parse_int_list,
    parse_kind_list,
    parse_range,
    parse_space_spec,
    try_parse_space_spec,
)
from .requests import build_request
from .types import ExitCode

__all__ = [
    'ExitCode',
    'RunConfig',
    'SEED_ENV_VAR',
    'SPACE_SPEC_FORMAT',
    'build_parser',
    'build_request',
    'parse_float_list',
    'parse_int_list',
    'parse_kind_list',
    'parse_range',
    'parse_space_spec',
    'resolve_output_format',
    'resolve_seed',
    'resolve_threads',
    'try_parse_space_spec',
]
