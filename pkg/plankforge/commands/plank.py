from __future__ import annotations

from plankforge.planks.solver import find_witness
from plankforge.planks.types import PlankInstance
from .handler import CommandHandler
from .requests import PlankRequest
from .types import CommandResult


class PlankHandler(CommandHandler[PlankRequest]):
    request_type = PlankRequest

    def validate(self, request: PlankRequest) -> None:
        if any(radius < 0 for radius in request.radii):
            raise ValueError('radii must be >= 0')

    def handle(self, request: PlankRequest) -> CommandResult:
        self.validate(request)
        instance = PlankInstance.normalized(
            request.polynomials,
            request.radii,
            request.space,
            request.regime,
            K=request.K,
            options=request.options.norm,
        )
        report = find_witness(instance, request.options)
        payload = {
            'space': request.space.describe(),
            'radii': instance.radii,
            'degrees': instance.degrees,
            'norm_estimates': instance.norm_estimates,
            'report': report,
        }
        return CommandResult.checked('plank', payload, report.success)
