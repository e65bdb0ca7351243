from __future__ import annotations

from plankforge.bounds.comparison import compare_bounds, hilbert_as_stated_audit, hilbert_comparison_ratios
from plankforge.bounds.registry import bound_log_value, value_if_finite
from plankforge.bounds.types import BoundKind, BoundSpec
from .handler import CommandHandler
from .requests import BoundComparisonRequest, ConstantSweepRequest, ConstantValueRequest, HilbertAuditRequest
from .types import CommandResult

HILBERT_KINDS = frozenset({
    BoundKind.HILBERT_COMPLEX,
    BoundKind.HILBERT_REAL,
    BoundKind.HILBERT_FINITE,
    BoundKind.HILBERT_FINITE_DERIVED,
})


class ConstantValueHandler(CommandHandler[ConstantValueRequest]):
    request_type = ConstantValueRequest

    def validate(self, request: ConstantValueRequest) -> None:
        if any(k < 1 for k in request.degrees):
            raise ValueError('degrees must be >= 1')

    def handle(self, request: ConstantValueRequest) -> CommandResult:
        self.validate(request)
        spec = BoundSpec(request.kind, request.degrees, request.field, d=request.d, p=request.p)
        log_value = bound_log_value(spec)
        return CommandResult('constants', {'spec': spec, 'log_value': log_value,
                                           'value_if_finite': value_if_finite(log_value)})


class ConstantSweepHandler(CommandHandler[ConstantSweepRequest]):
    request_type = ConstantSweepRequest

    def validate(self, request: ConstantSweepRequest) -> None:
        if any(d < 1 for d in request.d_values) or any(n < 1 for n in request.n_values):
            raise ValueError('d and n must be >= 1')

    def handle(self, request: ConstantSweepRequest) -> CommandResult:
        self.validate(request)
        rows = []
        for kind in request.kinds:
            p = 2.0 if kind in HILBERT_KINDS else request.p
            for d in request.d_values:
                for n in request.n_values:
                    spec = BoundSpec(kind, (request.k,) * n, request.field, d=d, p=p)
                    rows.append({
                        'kind': kind.value,
                        'field': request.field.value,
                        'd': d,
                        'p': '' if p is None else p,
                        'n': n,
                        'k': request.k,
                        'log_value': bound_log_value(spec),
                    })
        return CommandResult('constants-sweep', {'rows': len(rows)}, rows=tuple(rows))


class BoundComparisonHandler(CommandHandler[BoundComparisonRequest]):
    request_type = BoundComparisonRequest

    def validate(self, request: BoundComparisonRequest) -> None:
        pass

    def handle(self, request: BoundComparisonRequest) -> CommandResult:
        report = compare_bounds(request.n, request.k, request.d)
        return CommandResult('constants-compare', {'comparison': report})


class HilbertAuditHandler(CommandHandler[HilbertAuditRequest]):
    request_type = HilbertAuditRequest

    def validate(self, request: HilbertAuditRequest) -> None:
        pass

    def handle(self, request: HilbertAuditRequest) -> CommandResult:
        audit = hilbert_as_stated_audit()
        payload = {'audit': audit, 'ratios': hilbert_comparison_ratios(request.d, request.field),
                   'd': request.d, 'field': request.field}
        return CommandResult.checked('constants-audit', payload, audit.ratio_matches)
