from __future__ import annotations

import logging

from plankforge.bounds.search import estimate_Mn, estimate_polarization_constant
from plankforge.polynomials.factorization import factor_binary_form
from plankforge.polynomials.types import Field, Polynomial
from .handler import CommandHandler
from .requests import MnEstimateRequest, PolarizationRequest
from .types import CommandResult

logger = logging.getLogger(__name__)


class MnEstimateHandler(CommandHandler[MnEstimateRequest]):
    request_type = MnEstimateRequest

    def validate(self, request: MnEstimateRequest) -> None:
        for candidate in request.seed_tuples:
            if len(candidate) != request.n:
                raise ValueError(f'seed tuples must contain {request.n} polynomials, got {len(candidate)}')

    def handle(self, request: MnEstimateRequest) -> CommandResult:
        self.validate(request)
        result = estimate_Mn(
            request.space,
            request.n,
            degree_cap=request.degree_cap,
            budget=request.budget,
            seed=request.seed,
            degrees=request.degrees,
            seeds=request.seed_tuples,
            options=request.options,
            workers=request.workers,
        )
        return CommandResult('mn-estimate', {'space': request.space.describe(), 'n': request.n, 'result': result})


class PolarizationHandler(CommandHandler[PolarizationRequest]):
    request_type = PolarizationRequest

    def validate(self, request: PolarizationRequest) -> None:
        if request.binary_forms and not (request.space.d == 2 and request.space.is_complex):
            raise ValueError('binary forms can seed the search on complex planes only')
        for form in request.binary_forms:
            if form.degree != request.k:
                raise ValueError(f'binary forms must have degree k={request.k}, got {form.degree}')

    def seed_tuples(self, request: PolarizationRequest) -> list[tuple[Polynomial, ...]]:
        seeds = []
        for form in request.binary_forms:
            factorization = factor_binary_form(form, request.space)
            logger.info('factored a degree %d form with residual %.3g', factorization.degree, factorization.residual)
            seeds.append(tuple(Polynomial.linear_form(factor.coefficients, Field.COMPLEX)
                               for factor in factorization.factors))
        return seeds

    def handle(self, request: PolarizationRequest) -> CommandResult:
        self.validate(request)
        result = estimate_polarization_constant(
            request.space,
            request.k,
            budget=request.budget,
            seed=request.seed,
            seeds=self.seed_tuples(request),
            options=request.options,
            workers=request.workers,
        )
        return CommandResult('polarization', {'space': request.space.describe(), 'k': request.k, 'result': result})
