import argparse
import math

import pytest

from plankforge.bounds import BoundKind
from plankforge.cli.parsing import (
    parse_float_list,
    parse_int_list,
    parse_kind_list,
    parse_range,
    parse_space_spec,
    try_parse_space_spec,
)
from plankforge.polynomials import Field
from plankforge.spaces import SpaceSpec


def test_try_parse_space_spec_accepts_the_grammar() -> None:
    parsed, space = try_parse_space_spec('lp:p=2,d=3,field=complex')

    assert parsed is True
    assert space == SpaceSpec(Field.COMPLEX, 3, 2.0)


def test_try_parse_space_spec_accepts_infinity_in_any_key_order() -> None:
    parsed, space = try_parse_space_spec('lp:field=real, d=2, p=inf')

    assert parsed is True
    assert math.isinf(space.p)
    assert space.field is Field.REAL


@pytest.mark.parametrize('raw_value', (
    'p=2,d=3,field=real',
    'lp:p=2,d=3',
    'lp:p=2,d=3,field=quaternion',
    'lp:p=0.5,d=3,field=real',
    'lp:p=2,d=0,field=real',
    'lp:p=nan,d=2,field=real',
    'lp:p=2,d=2,d=3,field=real',
    'lp:p=2,d=two,field=real',
))
def test_try_parse_space_spec_reports_invalid_input(raw_value: str) -> None:
    parsed, _space = try_parse_space_spec(raw_value)

    assert parsed is False


def test_parse_space_spec_round_trips_describe() -> None:
    space = SpaceSpec(Field.COMPLEX, 4, 1.5)

    assert parse_space_spec(space.describe()) == space


def test_parse_space_spec_raises_argument_error() -> None:
    with pytest.raises(argparse.ArgumentTypeError, match='expected lp:p='):
        parse_space_spec('l2')


def test_parse_range_forms() -> None:
    assert parse_range('1..4') == (1, 2, 3, 4)
    assert parse_range('3') == (3,)
    assert parse_range('2,5,9') == (2, 5, 9)


def test_parse_range_rejects_empty_range() -> None:
    with pytest.raises(argparse.ArgumentTypeError, match='empty range'):
        parse_range('5..2')


def test_number_lists() -> None:
    assert parse_int_list('1,1') == (1, 1)
    assert parse_float_list('0.1,0.1,0.05') == (0.1, 0.1, 0.05)

    with pytest.raises(argparse.ArgumentTypeError):
        parse_float_list('0.1,x')


def test_parse_kind_list() -> None:
    assert parse_kind_list('eq4,eq6') == (BoundKind.HILBERT_REAL, BoundKind.FINITE_DIM)

    with pytest.raises(argparse.ArgumentTypeError, match='invalid bound kinds'):
        parse_kind_list('eq9')
