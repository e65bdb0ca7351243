from __future__ import annotations

import logging

from plankforge.spaces.optimizer import estimate_sup_norm
from .handler import CommandHandler
from .requests import NormRequest
from .types import CommandResult

logger = logging.getLogger(__name__)


class NormHandler(CommandHandler[NormRequest]):
    request_type = NormRequest

    def validate(self, request: NormRequest) -> None:
        for polynomial in request.polynomials:
            if polynomial.dim != request.space.d:
                raise ValueError(f'polynomial dimension {polynomial.dim} != space dimension {request.space.d}')

    def handle(self, request: NormRequest) -> CommandResult:
        self.validate(request)
        estimates = []
        for index, polynomial in enumerate(request.polynomials):
            estimate = estimate_sup_norm(polynomial, request.space, request.options)
            logger.info('polynomial %d: sup-norm %.17g', index, estimate.value)
            estimates.append(estimate)
        return CommandResult('norm', {'space': request.space.describe(), 'estimates': estimates})
