"""Exception types shared across the library.

Everything derives from :class:`QCatalanError` so callers can catch the
library's arithmetic failures with a single except clause while letting
programming errors (TypeError, ValueError on bad arguments) propagate.
"""


class QCatalanError(Exception):
    """Base class for all library-specific errors."""


class ExponentOverflowError(QCatalanError):
    """An exponent exceeded the supported range (no silent wraparound)."""


class DivisionByZeroError(QCatalanError):
    """Exact division by the zero polynomial."""


class NotDivisibleError(QCatalanError):
    """Exact polynomial division failed: numerator is not a multiple."""


class NonUnitConstantTermError(QCatalanError):
    """Series division requires the divisor's constant term to be 1."""


class DenominatorResidueError(QCatalanError):
    """A series coefficient expected to be polynomial kept a denominator."""


class InsufficientMomentsError(QCatalanError):
    """A moment sequence is too short for the requested computation."""


class InsufficientDepthError(QCatalanError):
    """A continued fraction has too few levels for the requested order."""


class InsufficientCoefficientsError(QCatalanError):
    """A coefficient array is too short for the requested recurrence."""


class BreakdownError(QCatalanError):
    """Orthogonal-polynomial extraction hit a vanishing norm.

    Carries the level at which no continued fraction of the requested
    depth exists.
    """

    def __init__(self, level: int, message: str | None = None):
        self.level = level
        super().__init__(message or f"breakdown at level {level}: zero norm")


class UnsupportedCombinationError(QCatalanError):
    """No closed form is available for the requested family/shift pair."""


class UnknownCheckError(QCatalanError):
    """The named identity check is not in the registry."""


class PolyParseError(QCatalanError):
    """A polynomial expression could not be parsed."""
