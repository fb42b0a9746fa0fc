"""Exception types raised across the package.

Input-shaped problems derive from :class:`InputError` (CLI exit code 3),
singularity from :class:`SingularMatrix` (exit code 2).
"""


class HeptaError(Exception):
    """Base class for every error raised by heptacyc."""


class InputError(HeptaError, ValueError):
    pass


class DimensionTooSmall(InputError):
    pass


class LengthMismatch(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class ReservedSlotNonzero(InputError):
    def __init__(self, family, index, value):
        self.family = family
        self.index = index
        self.value = value
        super().__init__(
            f"reserved slot {family}_{index} must be zero, got {value}"
        )


class NotHeptaStructured(InputError):
    def __init__(self, row, col, value):
        self.row = row
        self.col = col
        self.value = value
        super().__init__(
            f"entry ({row},{col}) = {value} lies outside the cyclic "
            "heptadiagonal pattern"
        )


class ParseError(InputError):
    pass


class GenerationFailed(HeptaError):
    def __init__(self, requested, achieved, attempts):
        self.requested = requested
        self.achieved = achieved
        super().__init__(
            f"could not engineer {requested} zero pivots after {attempts} "
            f"attempts (best achieved: {achieved})"
        )


class PoleAtZero(HeptaError, ZeroDivisionError):
    """A rational function was evaluated at t = 0 where its denominator vanishes."""


class SingularMatrix(HeptaError, ZeroDivisionError):
    pass


class PivotBreakdown(HeptaError, ArithmeticError):
    """Float-mode factorization met a pivot that is zero within tolerance."""

    def __init__(self, index, value):
        self.index = index
        self.value = value
        super().__init__(f"pivot alpha_{index} = {value!r} is zero within tolerance")
