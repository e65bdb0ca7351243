class Tolerances:
    BALL_SLACK = 1e-12
    CERTIFICATE = 1e-12
    ALLOCATION_FEASIBLE = 1e-9
    CONSTRAINT_SURFACE = 1e-12
    MARGIN = 1e-9
    NORMALIZED = 1e-6
    INEQUALITY_RTOL = 1e-6
    FACTOR_SCALE = 1e-9
    OPTIMIZER_TOL = 1e-12
    ARMIJO = 1e-4
    MIN_STEP = 1e-14
    MC_BATCH = 8192
    INTEGRAL_CUTOFF = 40.0
