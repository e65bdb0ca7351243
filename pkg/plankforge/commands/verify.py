from __future__ import annotations

from plankforge.bounds.verification import verify_product_inequality
from .handler import CommandHandler
from .requests import VerifyInequalityRequest
from .types import CommandResult


class VerifyInequalityHandler(CommandHandler[VerifyInequalityRequest]):
    request_type = VerifyInequalityRequest

    def validate(self, request: VerifyInequalityRequest) -> None:
        if not request.polynomials:
            raise ValueError('polynomials must not be empty')

    def handle(self, request: VerifyInequalityRequest) -> CommandResult:
        self.validate(request)
        report = verify_product_inequality(request.polynomials, request.space, request.kind, request.options,
                                           request.rtol)
        payload = {'space': request.space.describe(), 'report': report}
        return CommandResult.checked('verify-inequality', payload, report.passed)
