from __future__ import annotations

from plankforge.polynomials.types import Polynomial
from plankforge.remez.sublevel import check_lemma8_integral, estimate_sublevel_measure
from plankforge.spaces.optimizer import normalize_polynomial
from plankforge.spaces.types import NormOptions, SpaceSpec
from .handler import CommandHandler
from .requests import SublevelIntegralRequest, SublevelRequest
from .types import CommandResult


def _prepared(polynomial: Polynomial, space: SpaceSpec, normalize: bool, options: NormOptions) -> Polynomial:
    if normalize:
        polynomial, _estimate = normalize_polynomial(polynomial, space, options)
    return polynomial


class SublevelHandler(CommandHandler[SublevelRequest]):
    request_type = SublevelRequest

    def validate(self, request: SublevelRequest) -> None:
        if not 0 < request.t < 1:
            raise ValueError('t must be in (0, 1)')

    def handle(self, request: SublevelRequest) -> CommandResult:
        self.validate(request)
        polynomial = _prepared(request.polynomial, request.space, request.normalize, request.options)
        estimate = estimate_sublevel_measure(polynomial, request.space, request.t, request.samples, request.seed,
                                             request.options)
        return CommandResult.checked('remez-sublevel', {'space': request.space.describe(), 'estimate': estimate},
                                     estimate.passed)


class SublevelIntegralHandler(CommandHandler[SublevelIntegralRequest]):
    request_type = SublevelIntegralRequest

    def validate(self, request: SublevelIntegralRequest) -> None:
        if request.t_max <= 0:
            raise ValueError('t_max must be > 0')

    def handle(self, request: SublevelIntegralRequest) -> CommandResult:
        self.validate(request)
        polynomial = _prepared(request.polynomial, request.space, request.normalize, request.options)
        report = check_lemma8_integral(polynomial, request.space, request.samples, request.t_max, request.seed,
                                       request.options)
        passed = report.passed and report.homogeneous_passed is not False
        return CommandResult.checked('remez-lemma8', {'space': request.space.describe(), 'report': report}, passed)
