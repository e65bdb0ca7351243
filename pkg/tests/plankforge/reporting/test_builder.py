import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
import pytest

from plankforge.commands import CommandResult, CommandStatus
from plankforge.polynomials import Field, Polynomial
from plankforge.reporting import ReportBuilder, to_jsonable
from plankforge.spaces import SpaceSpec


class Shade(Enum):
    DARK = 'dark'


@dataclass(frozen=True, slots=True)
class Sample:
    shade: Shade
    values: tuple[float, ...]


def test_to_jsonable_converts_nested_dataclasses() -> None:
    assert to_jsonable(Sample(Shade.DARK, (1.0, math.inf))) == {'shade': 'dark', 'values': [1.0, 'inf']}


def test_to_jsonable_special_values() -> None:
    assert to_jsonable(1 - 2j) == [1.0, -2.0]
    assert to_jsonable(-math.inf) == '-inf'
    assert to_jsonable(math.nan) == 'nan'
    assert to_jsonable(np.float64(0.5)) == 0.5
    assert to_jsonable(np.int64(3)) == 3
    assert to_jsonable(np.array([1, 2])) == [1, 2]


def test_to_jsonable_uses_the_polynomial_codec() -> None:
    polynomial = Polynomial.monomial((1, 0), Field.COMPLEX, 2j)

    assert to_jsonable(polynomial) == {'dim': 2, 'field': 'complex', 'terms': [{'exp': [1, 0], 're': 0.0, 'im': 2.0}]}


def test_to_jsonable_space() -> None:
    assert to_jsonable(SpaceSpec(Field.REAL, 2, math.inf)) == {'field': 'real', 'd': 2, 'p': 'inf'}


def test_to_jsonable_rejects_unknown_types() -> None:
    with pytest.raises(TypeError, match='cannot serialize object'):
        to_jsonable(object())


def test_builder_embeds_the_reproducibility_header() -> None:
    result = CommandResult('constants', {'log_value': math.log(4)}, CommandStatus.CHECK_FAILED)

    report = ReportBuilder('9.9').build(result, {'command': 'constants', 'threads': 1}, seed=7)

    assert report.header == {'plankforge_version': '9.9', 'seed': 7, 'config': {'command': 'constants', 'threads': 1}}
    assert report.status == 'check-failed'
    assert report.result == {'log_value': math.log(4)}
