"""Exception types shared across the package."""


class CoarsenessError(Exception):
    """Base class for all errors raised by this package."""


class GeneralPositionError(CoarsenessError, ValueError):
    """Raised when a point set has duplicates or three collinear points."""


class InvalidIslandError(CoarsenessError, ValueError):
    """Raised when an index set is not an island of its point set."""


class BudgetExceeded(CoarsenessError):
    """Raised when a computation would exceed its configured work budget.

    ``estimate`` carries the estimated amount of work that was refused.
    """

    def __init__(self, message, estimate=None, budget=None):
        super().__init__(message)
        self.estimate = estimate
        self.budget = budget


class ParseError(CoarsenessError, ValueError):
    """Raised for malformed instance or block files; ``line`` is 1-based."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
