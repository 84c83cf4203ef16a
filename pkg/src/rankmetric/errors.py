"""Exception types shared across the package."""

from __future__ import annotations


class RankMetricError(Exception):
    """Base class for all errors raised by this package."""


class FieldError(RankMetricError, ValueError):
    """Invalid field parameters or an element outside the expected level."""


class AmbientMismatch(RankMetricError, ValueError):
    pass


class DegenerateCodeError(RankMetricError, ValueError):
    """A geometric algorithm was handed a degenerate code."""


class SingularMatrixError(RankMetricError, ValueError):
    pass


class BudgetExceeded(RankMetricError):
    """An exhaustive scan would exceed its configured budget.

    ``count`` is the exact number of objects the scan would have visited.
    """

    def __init__(self, what: str, count: int, budget: int):
        super().__init__(f"{what}: {count} items exceeds budget {budget}")
        self.what = what
        self.count = count
        self.budget = budget


class InvariantViolation(RankMetricError, AssertionError):
    """A computed profile broke a bound or implication that must always hold."""
