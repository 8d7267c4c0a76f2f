"""Exception hierarchy shared by all modules."""

from __future__ import annotations

from typing import Any


class LpStructError(Exception):
    """Base class for every error raised by lpstruct."""


class DimensionError(LpStructError, ValueError):
    pass


class CapacityError(LpStructError):
    """Input exceeds a desk-scale guard (exponential enumeration)."""


class PreconditionError(LpStructError, ValueError):
    pass


class FeasibilityError(PreconditionError):
    """A point fails primal or dual feasibility.

    ``side`` is ``"primal"`` or ``"dual"``.
    """

    def __init__(self, side: str, message: str):
        super().__init__(f"{side} infeasible: {message}")
        self.side = side


class NotOptimalError(PreconditionError):
    """A supplied point is not optimal, or the problem has no optimum.

    Carries the solver outcome and, when the problem is solvable, the exact
    gap between the optimal value and the value at the point.
    """

    def __init__(self, message: str, outcome: Any = None, gap: Any = None):
        super().__init__(message)
        self.outcome = outcome
        self.gap = gap


class UnboundedFeasibleSetError(PreconditionError):
    """Decomposition into basic optimal solutions needs a bounded feasible set."""

    def __init__(self, ray):
        self.ray = tuple(ray)
        super().__init__(
            "optimal-face decomposition needs a bounded feasible set; it is unbounded, "
            f"recession ray ({', '.join(str(v) for v in self.ray)})"
        )


class OrderingError(PreconditionError):
    """``A_minus <= A <= A_plus`` fails at entry ``(i, j)`` (0-based)."""

    def __init__(self, i: int, j: int):
        super().__init__(f"entrywise ordering violated at ({i}, {j})")
        self.position = (i, j)


class CertificateError(LpStructError):
    """An emitted certificate failed its exact re-check. Always a bug."""


class InternalInconsistencyError(LpStructError):
    """An outcome contradicts a proven theorem. Always a bug."""
