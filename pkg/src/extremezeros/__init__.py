"""Zeros and extreme-zero bounds for Laguerre, Jacobi and Gegenbauer polynomials."""
from .bounds import (
    BoundResult,
    bounds_for,
    gegenbauer_max_lower,
    jacobi_max_lower,
    jacobi_min_upper,
    laguerre_max_lower,
    laguerre_min_upper,
    quadratic_extreme_roots,
)
from .errors import (
    ConvergenceError,
    DegenerateNormalizationError,
    ExtremeZerosError,
    ParameterDomainError,
)
from .interlace import (
    ITERATED,
    SHIFT5,
    InterlacingReport,
    MixedIdentity,
    common_zeros,
    g2_quadratic,
    identity_residual,
    stieltjes_check,
    verify_jacobi_point,
    verify_theorem22,
)
from .polyfam import PolynomialFamily, RecurrenceCoefficients, evaluate, monic_recurrence, pochhammer
from .zerofind import ZeroSet, sturm_count, zeros

__version__ = "0.1.0"
