import json
from pathlib import Path

import numpy as np
import pytest

from plankforge.polynomials import Field, Polynomial, dumps_polynomial, load_polynomials, loads_polynomial
from plankforge.polynomials.random import random_polynomial
from plankforge.polynomials.serialization import polynomial_to_dict, try_parse_field


def test_serialization_emits_graded_lex_terms() -> None:
    polynomial = Polynomial.from_terms(2, Field.COMPLEX, {(0, 2): 1j, (2, 0): 3.0, (0, 0): -1.0})

    payload = polynomial_to_dict(polynomial)

    assert payload == {
        'dim': 2,
        'field': 'complex',
        'terms': [
            {'exp': [0, 0], 're': -1.0, 'im': 0.0},
            {'exp': [2, 0], 're': 3.0, 'im': 0.0},
            {'exp': [0, 2], 're': 0.0, 'im': 1.0},
        ],
    }


def test_loads_restores_polynomial() -> None:
    polynomial = random_polynomial(3, 3, Field.COMPLEX, np.random.default_rng(1))

    assert loads_polynomial(dumps_polynomial(polynomial)) == polynomial


def test_loads_drops_zero_coefficients() -> None:
    text = json.dumps({'dim': 1, 'field': 'real', 'terms': [{'exp': [1], 're': 0.0, 'im': 0.0}]})

    assert loads_polynomial(text).is_zero


@pytest.mark.parametrize(
    ('payload', 'message'),
    (
        ({'dim': 1, 'terms': []}, 'missing keys'),
        ({'dim': 1, 'field': 'quaternion', 'terms': []}, 'field must be'),
        ({'dim': 2, 'field': 'real', 'terms': [{'exp': [1], 're': 1.0}]}, 'must be 2 non-negative'),
        ({'dim': 1, 'field': 'real', 'terms': [{'exp': [1], 're': 1.0, 'im': 2.0}]}, 'real coefficients'),
    ),
)
def test_loads_rejects_invalid_payloads(payload: dict, message: str) -> None:
    with pytest.raises(ValueError, match=message):
        loads_polynomial(json.dumps(payload))


def test_loads_rejects_malformed_json() -> None:
    with pytest.raises(ValueError, match='invalid polynomial JSON'):
        loads_polynomial('{not json')


def test_load_polynomials_reads_directory_in_name_order(tmp_path: Path) -> None:
    first = Polynomial.coordinate(0, 2, Field.REAL)
    second = Polynomial.coordinate(1, 2, Field.REAL)
    (tmp_path / 'b.json').write_text(dumps_polynomial(second), encoding='utf-8')
    (tmp_path / 'a.json').write_text(dumps_polynomial(first), encoding='utf-8')

    assert load_polynomials([tmp_path]) == (first, second)


def test_try_parse_field_reports_invalid_input() -> None:
    assert try_parse_field(' Complex ') == (True, Field.COMPLEX)
    parsed, _field = try_parse_field('octonion')

    assert parsed is False
