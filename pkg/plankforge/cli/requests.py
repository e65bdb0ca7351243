from __future__ import annotations

import argparse
from collections.abc import Sequence

from plankforge.bounds.types import BoundKind
from plankforge.commands.requests import (
    BoundComparisonRequest,
    CommandRequest,
    ConstantSweepRequest,
    ConstantValueRequest,
    ExtremalFamilyRequest,
    HilbertAuditRequest,
    MnEstimateRequest,
    NormRequest,
    PlankRequest,
    PolarizationRequest,
    SharpnessRequest,
    SublevelIntegralRequest,
    SublevelRequest,
    VerifyInequalityRequest,
)
from plankforge.planks.types import Regime, WitnessOptions
from plankforge.polynomials.serialization import load_polynomial, load_polynomials
from plankforge.polynomials.types import Field, Polynomial
from plankforge.spaces.types import NormOptions, SpaceSpec
from .config import RunConfig


def _norm_options(args: argparse.Namespace, config: RunConfig) -> NormOptions:
    return NormOptions(starts=args.starts, seed=config.seed, workers=config.threads)


def _single(values: Sequence[int] | None, flag: str, default: int | None = None) -> int | None:
    if values is None:
        return default
    if len(values) != 1:
        raise ValueError(f'{flag} takes a single value here, got {len(values)}')
    return values[0]


def _space_for(args: argparse.Namespace, polynomials: Sequence[Polynomial]) -> SpaceSpec:
    if args.space is not None:
        return args.space
    first = polynomials[0]
    field = Field(args.field) if args.field is not None else first.field
    return SpaceSpec(field, first.dim, 2.0 if args.p is None else args.p)


def _norm_request(args: argparse.Namespace, config: RunConfig) -> CommandRequest:
    polynomials = load_polynomials(args.poly)
    return NormRequest(polynomials, _space_for(args, polynomials), _norm_options(args, config))


def _constants_request(args: argparse.Namespace, config: RunConfig) -> CommandRequest:
    field = Field(args.field) if args.field is not None else None
    if args.action == 'sweep':
        if args.kinds is None or args.d is None or args.n is None or args.k is None:
            raise ValueError('constants sweep needs --kinds, --d, --n and --k')
        return ConstantSweepRequest(args.kinds, field or Field.REAL, args.d, args.n, _single(args.k, '--k'), args.p)
    if args.action == 'compare':
        if args.n is None or args.k is None or args.d is None:
            raise ValueError('constants compare needs --n, --k and --d')
        return BoundComparisonRequest(_single(args.n, '--n'), _single(args.k, '--k'), _single(args.d, '--d'))
    if args.action == 'audit':
        return HilbertAuditRequest(_single(args.d, '--d', 1), field or Field.REAL)
    if args.kind is None or args.k is None:
        raise ValueError('constants needs --kind and --k')
    return ConstantValueRequest(BoundKind(args.kind), args.k, field or Field.COMPLEX, _single(args.d, '--d'), args.p)


def _mn_request(args: argparse.Namespace, config: RunConfig) -> CommandRequest:
    seed_tuples = (load_polynomials(args.seed_polys),) if args.seed_polys else ()
    return MnEstimateRequest(
        space=args.space,
        n=args.n,
        degree_cap=args.degree_cap,
        budget=args.budget,
        seed=config.seed,
        degrees=args.degrees,
        seed_tuples=seed_tuples,
        options=_norm_options(args, config),
        workers=config.threads,
    )


def _polarization_request(args: argparse.Namespace, config: RunConfig) -> CommandRequest:
    return PolarizationRequest(
        space=args.space,
        k=args.k,
        budget=args.budget,
        seed=config.seed,
        binary_forms=load_polynomials(args.forms) if args.forms else (),
        options=_norm_options(args, config),
        workers=config.threads,
    )


def _remez_request(args: argparse.Namespace, config: RunConfig) -> CommandRequest:
    polynomial = load_polynomial(args.poly)
    space = _space_for(args, (polynomial,))
    options = _norm_options(args, config)
    if args.action == 'sublevel':
        if args.t is None:
            raise ValueError('remez sublevel needs --t')
        return SublevelRequest(polynomial, space, args.t, args.samples, config.seed, args.normalize, options)
    return SublevelIntegralRequest(polynomial, space, args.samples, args.t_max, config.seed, args.normalize, options)


def _plank_request(args: argparse.Namespace, config: RunConfig) -> CommandRequest:
    options = WitnessOptions(norm=_norm_options(args, config), r_cap=args.r_cap)
    return PlankRequest(load_polynomials(args.polys), args.space, args.radii, Regime(args.regime), args.K, options)


def _extremal_request(args: argparse.Namespace, config: RunConfig) -> CommandRequest:
    if args.action == 'bst':
        return SharpnessRequest(BoundKind.BST, args.n)
    if args.action == 'hilbert':
        return SharpnessRequest(BoundKind.HILBERT_COMPLEX, args.n)
    if args.d is None:
        raise ValueError('extremal family needs --d')
    return ExtremalFamilyRequest(args.d, args.n, args.k, Field(args.field), not args.no_cross_check,
                                 _norm_options(args, config))


def _verify_request(args: argparse.Namespace, config: RunConfig) -> CommandRequest:
    return VerifyInequalityRequest(load_polynomials(args.polys), args.space, BoundKind(args.kind), args.rtol,
                                   _norm_options(args, config))


REQUEST_BUILDERS = {
    'norm': _norm_request,
    'constants': _constants_request,
    'mn-estimate': _mn_request,
    'polarization': _polarization_request,
    'remez': _remez_request,
    'plank': _plank_request,
    'extremal': _extremal_request,
    'verify-inequality': _verify_request,
}


def build_request(args: argparse.Namespace, config: RunConfig) -> CommandRequest:
    try:
        builder = REQUEST_BUILDERS[args.command]
    except KeyError:
        raise KeyError(f'No request builder registered for {args.command}') from None
    return builder(args, config)
