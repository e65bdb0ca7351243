class PlankforgeError(Exception):
    pass


class DimensionMismatchError(PlankforgeError, ValueError):
    pass


class InadmissibleParametersError(PlankforgeError, ValueError):
    pass


class NormalizationError(PlankforgeError, ValueError):
    pass


class FeasibilityError(PlankforgeError, ValueError):
    def __init__(self, gate: str, lhs: float, rhs: float) -> None:
        self.gate = gate
        self.lhs = lhs
        self.rhs = rhs
        super().__init__(f'feasibility gate violated: {gate} ({lhs!r} > {rhs!r})')


class AllocationInfeasibleError(PlankforgeError, ArithmeticError):
    pass


class RationalizationError(PlankforgeError, ValueError):
    pass
