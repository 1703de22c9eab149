"""Exception types shared across the package."""

from __future__ import annotations

__all__ = [
    "QuotientWalkError",
    "ContractViolationError",
    "InvalidSizeError",
    "InvalidInputError",
    "EdgeListParseError",
    "RetryExhaustedError",
    "ToleranceBreachError",
]


class QuotientWalkError(Exception):
    """Base class for every error raised by this package."""


class ContractViolationError(QuotientWalkError, ValueError):
    """A numeric contract was violated.

    Raised for non-Hermitian matrices passed to the eigensolver,
    non-unimodular coin eigenvalues, unnormalized quantum states and
    similar precondition failures.
    """


class InvalidSizeError(QuotientWalkError, ValueError):
    """A graph constructor was called with an infeasible size or degree."""


class InvalidInputError(QuotientWalkError, ValueError):
    """Structurally invalid input.

    Examples: a disconnected graph passed to a search driver, a
    non-regular base handed to ``apex_join``, a partition block with no
    incident arcs.
    """


class EdgeListParseError(QuotientWalkError, ValueError):
    """Malformed edge-list text; carries the offending line number (0 = whole file)."""

    def __init__(self, line: int, message: str):
        self.line = int(line)
        self.message = message
        where = f"line {line}: " if line > 0 else ""
        super().__init__(f"{where}{message}")


class RetryExhaustedError(QuotientWalkError, RuntimeError):
    """A randomized construction failed to produce a valid object within its retry budget."""


class ToleranceBreachError(QuotientWalkError, RuntimeError):
    """Two supposedly equivalent computations disagreed beyond the comparison tolerance."""
