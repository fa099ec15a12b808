"""Real roots of monic integer polynomials, computed without rounding.

Iterating the companion matrix of a polynomial (or an affine image of it)
on an integer seed produces a family of integer sequences whose component
ratios converge to roots.  All iteration state is exact: arbitrary-size
integers for the sequences, rationals for the convergents.  Floating point
appears only in the independent reference solver used by tests and the
benchmark.
"""

from .companion import (
    CompanionMatrix,
    affine,
    cayley_hamilton_residual,
    companion_of,
    mat_vec,
)
from .driver import (
    DEFAULT_OPTIONS,
    DriverOptions,
    RootEstimate,
    RootStatus,
    dominant_root,
    enumerate_real_roots,
    root_via_shift,
)
from .errors import (
    DegreeTooSmallError,
    DimensionMismatchError,
    EmptyInputError,
    EstimatorMismatchError,
    NormalizedModeUnsupportedError,
    NotMonicError,
    NoZeroRootError,
    OutOfRangeError,
    SeqrootsError,
    ZeroDenominatorError,
    ZeroSeedError,
)
from .oracle import ComplexRootSet, dominance_gap, durand_kerner, newton_refine
from .poly import (
    IDENTITY_SHIFT,
    MAX_DEGREE,
    AffineShift,
    MonicIntPolynomial,
    cauchy_bound,
    deflate_zero_root,
    eval_rational,
    make_polynomial,
    reversed_monic,
    shift_scale,
)
from .render import EXACT_AGREEMENT, agreement_digits, decimal_string, ratio_string
from .sequences import (
    Convergent,
    SequenceFamily,
    affine_matrix,
    default_seed,
    init_family,
    shifted_family,
)

__version__ = "0.1.0"

__all__ = [
    "AffineShift",
    "CompanionMatrix",
    "ComplexRootSet",
    "Convergent",
    "DEFAULT_OPTIONS",
    "DegreeTooSmallError",
    "DimensionMismatchError",
    "DriverOptions",
    "EXACT_AGREEMENT",
    "EmptyInputError",
    "EstimatorMismatchError",
    "IDENTITY_SHIFT",
    "MAX_DEGREE",
    "MonicIntPolynomial",
    "NormalizedModeUnsupportedError",
    "NotMonicError",
    "NoZeroRootError",
    "OutOfRangeError",
    "RootEstimate",
    "RootStatus",
    "SeqrootsError",
    "SequenceFamily",
    "ZeroDenominatorError",
    "ZeroSeedError",
    "affine",
    "affine_matrix",
    "agreement_digits",
    "cauchy_bound",
    "cayley_hamilton_residual",
    "companion_of",
    "decimal_string",
    "default_seed",
    "deflate_zero_root",
    "dominance_gap",
    "dominant_root",
    "durand_kerner",
    "enumerate_real_roots",
    "eval_rational",
    "init_family",
    "make_polynomial",
    "mat_vec",
    "newton_refine",
    "ratio_string",
    "reversed_monic",
    "root_via_shift",
    "shift_scale",
    "shifted_family",
]
