from .constants import BoundComparisonHandler, ConstantSweepHandler, ConstantValueHandler, HilbertAuditHandler
from .extremal import ExtremalFamilyHandler, SharpnessHandler
from .handler import CommandHandler
from .norm import NormHandler
from .plank import PlankHandler
from .registry import HandlerRegistry
from .remez import SublevelHandler, SublevelIntegralHandler
from .requests import (
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
from .search import MnEstimateHandler, PolarizationHandler
from .types import CommandResult, CommandStatus
from .verify import VerifyInequalityHandler


def default_handler_registry() -> HandlerRegistry:
    registry = HandlerRegistry()
    for handler in (
        NormHandler(),
        ConstantValueHandler(),
        ConstantSweepHandler(),
        BoundComparisonHandler(),
        HilbertAuditHandler(),
        MnEstimateHandler(),
        PolarizationHandler(),
        SublevelHandler(),
        SublevelIntegralHandler(),
        PlankHandler(),
        ExtremalFamilyHandler(),
        SharpnessHandler(),
        VerifyInequalityHandler(),
    ):
        registry.register(handler)
    return registry


__all__ = [
    'CommandRequest',
    'CommandHandler',
    'CommandResult',
    'CommandStatus',
    'HandlerRegistry',
    'default_handler_registry',
    'NormRequest',
    'ConstantValueRequest',
    'ConstantSweepRequest',
    'BoundComparisonRequest',
    'HilbertAuditRequest',
    'MnEstimateRequest',
    'PolarizationRequest',
    'SublevelRequest',
    'SublevelIntegralRequest',
    'PlankRequest',
    'ExtremalFamilyRequest',
    'SharpnessRequest',
    'VerifyInequalityRequest',
    'NormHandler',
    'ConstantValueHandler',
    'ConstantSweepHandler',
    'BoundComparisonHandler',
    'HilbertAuditHandler',
    'MnEstimateHandler',
    'PolarizationHandler',
    'SublevelHandler',
    'SublevelIntegralHandler',
    'PlankHandler',
    'ExtremalFamilyHandler',
    'SharpnessHandler',
    'VerifyInequalityHandler',
]
