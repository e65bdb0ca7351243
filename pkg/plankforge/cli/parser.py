from __future__ import annotations

import argparse
from pathlib import Path

from plankforge import __version__
from plankforge.bounds.types import BoundKind
from plankforge.planks.types import Regime
from plankforge.polynomials.types import Field
from plankforge.reporting.types import OutputFormat
from .parsing import (
    SPACE_SPEC_FORMAT,
    parse_float_list,
    parse_int_list,
    parse_kind_list,
    parse_range,
    parse_space_spec,
)

KIND_CHOICES = [kind.value for kind in BoundKind]
FIELD_CHOICES = [field.value for field in Field]


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--seed', type=int, default=None,
                        help='random seed (falls back to PLANKFORGE_SEED, then 0)')
    common.add_argument('--threads', type=int, default=None, help='worker cap (default: available cores)')
    common.add_argument('--out', type=Path, default=None, help='write the report here instead of stdout')
    common.add_argument('--format', choices=[fmt.value for fmt in OutputFormat], default=None,
                        help='report format; csv for constants sweep, json otherwise')
    common.add_argument('-v', '--verbose', action='count', default=0, help='-v for INFO, -vv for DEBUG logs')
    return common


def _space_options(parser: argparse.ArgumentParser, required: bool = False) -> None:
    parser.add_argument('--space', type=parse_space_spec, required=required, help=SPACE_SPEC_FORMAT)
    if not required:
        parser.add_argument('--p', type=float, default=None, help='lp exponent when --space is omitted (default 2)')
        parser.add_argument('--field', choices=FIELD_CHOICES, default=None)


def _starts_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--starts', type=int, default=None, help='multi-start count (default 32 d)')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='plankforge',
        description='Product-norm constants, sup-norm estimates and plank witnesses on lp spaces.',
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    commands = parser.add_subparsers(dest='command', required=True)
    common = _common_options()

    norm = commands.add_parser('norm', parents=[common], help='estimate sup norms on the unit ball')
    norm.add_argument('--poly', type=Path, nargs='+', required=True, help='polynomial JSON files or directories')
    _space_options(norm)
    _starts_option(norm)

    constants = commands.add_parser('constants', parents=[common], help='closed-form product constants')
    constants.add_argument('action', nargs='?', choices=('value', 'sweep', 'compare', 'audit'), default='value')
    constants.add_argument('--kind', choices=KIND_CHOICES, default=None)
    constants.add_argument('--kinds', type=parse_kind_list, default=None, help='comma-separated kinds for sweep')
    constants.add_argument('--field', choices=FIELD_CHOICES, default=None)
    constants.add_argument('--d', type=parse_range, default=None, help='dimension, or a range for sweep')
    constants.add_argument('--n', type=parse_range, default=None, help='polynomial count, or a range for sweep')
    constants.add_argument('--k', type=parse_int_list, default=None, help='degrees, or the shared degree for sweep')
    constants.add_argument('--p', type=float, default=None)

    mn = commands.add_parser('mn-estimate', parents=[common], help='search for a lower bound on M_n')
    _space_options(mn, required=True)
    mn.add_argument('--n', type=int, required=True)
    mn.add_argument('--degree-cap', type=int, default=2)
    mn.add_argument('--degrees', type=parse_int_list, default=None, help='fix the degree assignment')
    mn.add_argument('--budget', type=int, default=64)
    mn.add_argument('--seed-polys', type=Path, nargs='+', default=None, help='one seed tuple of polynomial files')
    _starts_option(mn)

    polarization = commands.add_parser('polarization', parents=[common], help='search for a polarization lower bound')
    _space_options(polarization, required=True)
    polarization.add_argument('--k', type=int, required=True)
    polarization.add_argument('--budget', type=int, default=64)
    polarization.add_argument('--forms', type=Path, nargs='+', default=None, help='binary forms to factor as seeds')
    _starts_option(polarization)

    remez = commands.add_parser('remez', parents=[common], help='Monte-Carlo sublevel-set checks')
    remez.add_argument('action', choices=('sublevel', 'lemma8'))
    remez.add_argument('--poly', type=Path, required=True)
    _space_options(remez)
    remez.add_argument('--t', type=float, default=None, help='sublevel threshold')
    remez.add_argument('--samples', type=int, default=100_000)
    remez.add_argument('--t-max', type=float, default=40.0)
    remez.add_argument('--normalize', action='store_true', help='divide by the estimated sup norm first')
    _starts_option(remez)

    plank = commands.add_parser('plank', parents=[common], help='find a point outside every plank')
    plank.add_argument('--polys', type=Path, nargs='+', required=True, help='polynomial JSON files or directories')
    _space_options(plank, required=True)
    plank.add_argument('--radii', type=parse_float_list, required=True)
    plank.add_argument('--regime', choices=[regime.value for regime in Regime], default=Regime.LP.value)
    plank.add_argument('--K', type=float, default=None, help='plank constant for the k-custom regime')
    plank.add_argument('--r-cap', type=int, default=None, help='cap on the rationalized exponents')
    _starts_option(plank)

    extremal = commands.add_parser('extremal', parents=[common], help='extremal families and sharpness checks')
    extremal.add_argument('action', nargs='?', choices=('family', 'bst', 'hilbert'), default='family')
    extremal.add_argument('--d', type=int, default=None)
    extremal.add_argument('--n', type=int, required=True)
    extremal.add_argument('--k', type=int, default=1)
    extremal.add_argument('--field', choices=FIELD_CHOICES, default=Field.REAL.value)
    extremal.add_argument('--no-cross-check', action='store_true', help='skip the numerical product-norm estimate')
    _starts_option(extremal)

    verify = commands.add_parser('verify-inequality', parents=[common], help='check a product inequality numerically')
    verify.add_argument('--polys', type=Path, nargs='+', required=True)
    _space_options(verify, required=True)
    verify.add_argument('--kind', choices=KIND_CHOICES, required=True)
    verify.add_argument('--rtol', type=float, default=1e-6)
    _starts_option(verify)

    return parser
