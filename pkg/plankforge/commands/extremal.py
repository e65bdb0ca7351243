from __future__ import annotations

from plankforge.bounds.types import BoundKind
from plankforge.extremal.family import bst_sharpness_check, build_family, hilbert_sharpness_check, verify_equality
from .handler import CommandHandler
from .requests import ExtremalFamilyRequest, SharpnessRequest
from .types import CommandResult


class ExtremalFamilyHandler(CommandHandler[ExtremalFamilyRequest]):
    request_type = ExtremalFamilyRequest

    def validate(self, request: ExtremalFamilyRequest) -> None:
        if request.n <= request.d:
            raise ValueError(f'n must be > d, got n={request.n}, d={request.d}')

    def handle(self, request: ExtremalFamilyRequest) -> CommandResult:
        self.validate(request)
        family = build_family(request.d, request.n, request.k, request.field)
        report = verify_equality(family, request.cross_check, request.options)
        payload = {'polynomials': family.polynomials, 'total_degree': family.total_degree, 'report': report}
        return CommandResult.checked('extremal', payload, report.passed and report.estimate_passed is not False)


class SharpnessHandler(CommandHandler[SharpnessRequest]):
    request_type = SharpnessRequest

    def validate(self, request: SharpnessRequest) -> None:
        if request.n < 1:
            raise ValueError('n must be >= 1')

    def handle(self, request: SharpnessRequest) -> CommandResult:
        self.validate(request)
        check = bst_sharpness_check if request.kind is BoundKind.BST else hilbert_sharpness_check
        report = check(request.n)
        return CommandResult.checked('extremal-sharpness', {'report': report}, report.passed)
