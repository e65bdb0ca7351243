from __future__ import annotations

import json
from collections.abc import Iterable
from pathlib import Path

from .types import Field, Polynomial


def polynomial_to_dict(polynomial: Polynomial) -> dict[str, object]:
    return {
        'dim': polynomial.dim,
        'field': polynomial.field.value,
        'terms': [
            {'exp': list(alpha), 're': coefficient.real, 'im': coefficient.imag}
            for alpha, coefficient in polynomial.terms
        ],
    }


def try_parse_field(raw_value: str) -> tuple[bool, Field]:
    try:
        return True, Field(raw_value.strip().lower())
    except (AttributeError, ValueError):
        return False, Field.REAL


def polynomial_from_dict(payload: dict[str, object]) -> Polynomial:
    if not isinstance(payload, dict):
        raise ValueError('polynomial payload must be an object')
    missing = {'dim', 'field', 'terms'} - payload.keys()
    if missing:
        raise ValueError(f'polynomial payload missing keys: {sorted(missing)}')

    parsed, field = try_parse_field(payload['field'])
    if not parsed:
        raise ValueError(f"field must be 'real' or 'complex', got {payload['field']!r}")
    dim = payload['dim']
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise ValueError('dim must be an integer')

    terms = []
    for entry in payload['terms']:
        exponents = entry.get('exp')
        if not isinstance(exponents, list) or any(not isinstance(e, int) or isinstance(e, bool) for e in exponents):
            raise ValueError(f'term exponents must be a list of integers, got {exponents!r}')
        coefficient = complex(float(entry.get('re', 0.0)), float(entry.get('im', 0.0)))
        terms.append((tuple(exponents), coefficient))

    if dim <= 0:
        raise ValueError('dim must be > 0')
    for alpha, _ in terms:
        if len(alpha) != dim or any(exponent < 0 for exponent in alpha):
            raise ValueError(f'term exponents {list(alpha)} must be {dim} non-negative integers')
    return Polynomial.from_terms(dim, field, terms)


def dumps_polynomial(polynomial: Polynomial) -> str:
    return json.dumps(polynomial_to_dict(polynomial), sort_keys=True)


def loads_polynomial(text: str) -> Polynomial:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f'invalid polynomial JSON: {exc.msg}') from exc
    return polynomial_from_dict(payload)


def load_polynomial(path: str | Path) -> Polynomial:
    return loads_polynomial(Path(path).read_text(encoding='utf-8'))


def load_polynomials(paths: Iterable[str | Path]) -> tuple[Polynomial, ...]:
    """Load polynomials from files; a directory contributes its *.json files in name order."""
    files: list[Path] = []
    for raw_path in paths:
        path = Path(raw_path)
        if path.is_dir():
            files.extend(sorted(path.glob('*.json')))
        else:
            files.append(path)
    if not files:
        raise ValueError('no polynomial files given')
    return tuple(load_polynomial(path) for path in files)
