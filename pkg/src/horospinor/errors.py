"""Exception types shared across the package."""


class HoroSpinorError(Exception):
    """Base class for every error raised by this package."""


class DomainError(HoroSpinorError, ValueError):
    """An input lies outside the domain of an operation."""


class NotASpinorError(DomainError):
    """A quaternion pair fails the spinor condition (or is zero)."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class NotCliffordError(DomainError):
    """A 2x2 quaternionic matrix is not in SL2 over the paravectors."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class DegenerateConfigurationError(HoroSpinorError, ValueError):
    """An identity needs the inverse of a lambda length that vanishes."""


class UndefinedQuasideterminantError(HoroSpinorError, ZeroDivisionError):
    """A quasideterminant formula would invert a zero entry."""


class NumericalDriftError(HoroSpinorError, ArithmeticError):
    """Accumulated rounding pushed a value off its constraint set."""
