"""Exact factorization, determinants, solves and inverses of cyclic
heptadiagonal and anti-cyclic heptadiagonal matrices."""

from .core import (
    AntiCyclicHeptaMatrix,
    CyclicHeptaMatrix,
    apply,
    from_bands,
    from_dense,
    to_dense,
)
from .errors import (
    DimensionTooSmall,
    HeptaError,
    LengthMismatch,
    NotHeptaStructured,
    PivotBreakdown,
    PoleAtZero,
    ReservedSlotNonzero,
    SingularMatrix,
)
from .factorization import Factorization, determinant, factor, leading_minors, reconstruct_lu
from .scalars import Poly, Rational, RatFunc, T, eval_at_zero, poly_gcd
from .solve import anti_determinant, anti_invert, invert, solve

__version__ = "0.1.0"

__all__ = [
    "AntiCyclicHeptaMatrix", "CyclicHeptaMatrix", "apply", "from_bands", "from_dense",
    "to_dense", "DimensionTooSmall", "HeptaError", "LengthMismatch", "NotHeptaStructured",
    "PivotBreakdown", "PoleAtZero", "ReservedSlotNonzero", "SingularMatrix",
    "Factorization", "determinant", "factor", "leading_minors", "reconstruct_lu",
    "Poly", "Rational", "RatFunc", "T", "eval_at_zero", "poly_gcd",
    "anti_determinant", "anti_invert", "invert", "solve",
]
