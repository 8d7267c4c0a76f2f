"""Basic solutions of ``A x = b, x >= 0`` by exhaustive support enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Union

from . import lp
from .errors import CapacityError, DimensionError, FeasibilityError, NotOptimalError
from .exact import (
    Matrix,
    as_matrix,
    columns_independent,
    dot,
    is_nonneg,
    mat_vec,
    rank,
    solve_exact,
    support,
    vector,
    zeros,
)

MAX_COLUMNS = 30


@dataclass(frozen=True)
class BasicSolution:
    x: tuple
    support: tuple


@dataclass(frozen=True)
class VertexSet:
    vertices: tuple

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def points(self) -> list:
        return [v.x for v in self.vertices]


def enumerate_basic(A, b) -> VertexSet:
    """All basic solutions of ``A x = b, x >= 0``.

    Every column subset of size at most rank(A) with independent columns is
    solved; nonnegative solutions are kept and deduplicated by value, since
    a degenerate vertex is reachable from several supports.
    """
    A = as_matrix(A)
    b = vector(b)
    if len(b) != A.rows:
        raise DimensionError(f"b has length {len(b)}, A has {A.rows} rows")
    if A.cols > MAX_COLUMNS:
        raise CapacityError(f"enumeration refuses n = {A.cols} > {MAX_COLUMNS} columns")
    found = {}
    for k in range(rank(A) + 1):
        for S in combinations(range(A.cols), k):
            sub = A.select_columns(S)
            if k and rank(sub) < k:
                continue
            z = solve_exact(sub, b)
            if z is None or not is_nonneg(z):
                continue
            x = [Fraction(0)] * A.cols
            for j, v in zip(S, z):
                x[j] = v
            x = tuple(x)
            if x not in found:
                found[x] = BasicSolution(x, support(x))
    return VertexSet(tuple(found[x] for x in sorted(found)))


def enumerate_basic_optimal(prob: lp.LpProblem) -> VertexSet:
    """Basic solutions attaining the optimal value of ``prob``."""
    outcome = lp.solve(prob)
    if not isinstance(outcome, lp.Optimal):
        raise NotOptimalError(f"problem has no optimum ({outcome.kind})", outcome=outcome)
    opt = outcome.value
    verts = tuple(v for v in enumerate_basic(prob.A, prob.b) if dot(prob.p, v.x) == opt)
    return VertexSet(verts)


@dataclass(frozen=True)
class Bounded:
    kind = "bounded"


@dataclass(frozen=True)
class UnboundedRay:
    r: tuple
    kind = "unbounded_ray"


def is_bounded(A, b) -> Union[Bounded, UnboundedRay]:
    """Decide boundedness of ``{x | A x = b, x >= 0}`` via its recession cone.

    Solves ``max sum r`` over ``A r = 0, r >= 0, sum r <= 1``; a positive
    optimum yields a recession ray.
    """
    A = as_matrix(A)
    b = vector(b)
    feas = lp.solve(lp.LpProblem(A, b, zeros(A.cols)))
    if isinstance(feas, lp.Infeasible):
        raise FeasibilityError("primal", "system A x = b, x >= 0 has no solution")
    n = A.cols
    rows = [list(r) + [Fraction(0)] for r in A.data]
    rows.append([Fraction(1)] * (n + 1))
    cone = lp.LpProblem(
        Matrix.from_rows(rows, cols=n + 1),
        zeros(A.rows) + (Fraction(1),),
        (Fraction(1),) * n + (Fraction(0),),
    )
    outcome = lp.solve(cone)
    if outcome.value == 0:
        return Bounded()
    return UnboundedRay(outcome.x[:n])


def is_extreme(A, b, x) -> bool:
    """True iff the columns of A on the positive support of x are independent."""
    A = as_matrix(A)
    x = vector(x)
    if len(x) != A.cols or not is_nonneg(x) or mat_vec(A, x) != vector(b):
        raise FeasibilityError("primal", "x must satisfy A x = b, x >= 0")
    return columns_independent(A, support(x))
