"""Standard-form linear programs and an exact two-phase simplex.

Problems have the form::

    maximize p.x  subject to  A x = b,  x >= 0

Every outcome of :func:`solve` carries a certificate (a dual optimum, a
Farkas witness, or a recession ray) and is re-checked exactly before it is
returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import CertificateError, DimensionError, FeasibilityError
from .exact import (
    Matrix,
    as_matrix,
    dot,
    is_nonneg,
    mat_vec,
    vec_mat,
    vector,
    zeros,
)

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class LpProblem:
    A: Matrix
    b: tuple
    p: tuple

    def __post_init__(self):
        object.__setattr__(self, "A", as_matrix(self.A))
        object.__setattr__(self, "b", vector(self.b))
        object.__setattr__(self, "p", vector(self.p))
        if len(self.b) != self.A.rows:
            raise DimensionError(f"b has length {len(self.b)}, A has {self.A.rows} rows")
        if len(self.p) != self.A.cols:
            raise DimensionError(f"p has length {len(self.p)}, A has {self.A.cols} columns")
        if self.A.cols < 1:
            raise DimensionError("problem needs at least one variable")

    @property
    def m(self) -> int:
        return self.A.rows

    @property
    def n(self) -> int:
        return self.A.cols

    def with_objective(self, p) -> "LpProblem":
        return LpProblem(self.A, self.b, p)

    def with_rhs(self, b) -> "LpProblem":
        return LpProblem(self.A, b, self.p)

    def is_feasible_point(self, x) -> bool:
        return len(x) == self.n and is_nonneg(x) and mat_vec(self.A, x) == self.b

    def is_dual_feasible(self, y) -> bool:
        if len(y) != self.m:
            return False
        return all(a >= c for a, c in zip(vec_mat(y, self.A), self.p))


@dataclass(frozen=True)
class PrimalSolution:
    x: tuple
    value: Fraction


@dataclass(frozen=True)
class DualSolution:
    y: tuple


@dataclass(frozen=True)
class FarkasCertificate:
    q: tuple
    beta: Fraction


@dataclass(frozen=True)
class Optimal:
    primal: PrimalSolution
    dual: DualSolution
    kind = "optimal"

    @property
    def x(self) -> tuple:
        return self.primal.x

    @property
    def value(self) -> Fraction:
        return self.primal.value


@dataclass(frozen=True)
class Infeasible:
    """``witness^T A <= 0`` componentwise and ``witness . b > 0``."""

    witness: tuple
    kind = "infeasible"


@dataclass(frozen=True)
class Unbounded:
    """``A ray = 0``, ``ray >= 0`` and ``p . ray > 0``."""

    ray: tuple
    kind = "unbounded"


SolveOutcome = Union[Optimal, Infeasible, Unbounded]


class _Tableau:
    """Dense simplex tableau over ``[S A | I]`` with ``S`` flipping rows so b >= 0.

    The trailing identity block holds the artificial columns; because it
    starts as the identity, it always stores the current basis inverse.
    """

    def __init__(self, A: Matrix, b: Sequence[Fraction]):
        self.m, self.n = A.rows, A.cols
        self.sign = [ONE if bi >= 0 else -ONE for bi in b]
        self.T = []
        for i in range(self.m):
            s = self.sign[i]
            art = [ZERO] * self.m
            art[i] = ONE
            self.T.append([s * a for a in A.data[i]] + art)
        self.rhs = [s * bi for s, bi in zip(self.sign, b)]
        self.basis = [self.n + i for i in range(self.m)]
        self.obj = None  # reduced costs for the objective being run

    def pivot(self, r: int, c: int) -> None:
        row = self.T[r]
        inv = 1 / row[c]
        if inv != 1:
            row = [a * inv for a in row]
            self.T[r] = row
            self.rhs[r] *= inv
        nz = [j for j, a in enumerate(row) if a]
        for i in range(self.m):
            if i == r:
                continue
            f = self.T[i][c]
            if f:
                Ti = self.T[i]
                for j in nz:
                    Ti[j] -= f * row[j]
                self.rhs[i] -= f * self.rhs[r]
        if self.obj is not None:
            f = self.obj[c]
            if f:
                for j in nz:
                    self.obj[j] -= f * row[j]
        self.basis[r] = c

    def reduced_cost(self, cost: Sequence[Fraction], j: int) -> Fraction:
        d = cost[j]
        for i, k in enumerate(self.basis):
            ck = cost[k]
            if ck:
                a = self.T[i][j]
                if a:
                    d -= ck * a
        return d

    def run(self, cost: Sequence[Fraction], allowed: range) -> int | None:
        """Maximize ``cost`` by Bland's rule over entering columns in ``allowed``.

        Returns ``None`` at an optimum, or the entering column whose
        tableau column proves unboundedness.
        """
        self.obj = [self.reduced_cost(cost, j) for j in range(self.n + self.m)]
        while True:
            enter = next((j for j in allowed if self.obj[j] > 0), None)
            if enter is None:
                return None
            leave = None
            best = None
            for i in range(self.m):
                a = self.T[i][enter]
                if a > 0:
                    ratio = self.rhs[i] / a
                    if (
                        best is None
                        or ratio < best
                        or (ratio == best and self.basis[i] < self.basis[leave])
                    ):
                        best, leave = ratio, i
            if leave is None:
                return enter
            self.pivot(leave, enter)

    def objective(self, cost) -> Fraction:
        return sum((cost[k] * v for k, v in zip(self.basis, self.rhs)), ZERO)

    def dual(self, cost) -> tuple:
        """Simplex multipliers ``c_B^T B^{-1}`` mapped back to the unflipped rows."""
        y = []
        for i in range(self.m):
            yi = ZERO
            for k, bk in enumerate(self.basis):
                ck = cost[bk]
                if ck:
                    yi += ck * self.T[k][self.n + i]
            y.append(self.sign[i] * yi)
        return tuple(y)

    def primal(self) -> tuple:
        x = [ZERO] * self.n
        for k, v in zip(self.basis, self.rhs):
            if k < self.n:
                x[k] = v
        return tuple(x)

    def drive_out_artificials(self) -> None:
        """Pivot zero-level artificials out of the basis where possible.

        An artificial that cannot leave sits on a row that is zero across
        all structural columns (a redundant equation) and stays at zero.
        """
        for i in range(self.m):
            if self.basis[i] >= self.n:
                j = next((j for j in range(self.n) if self.T[i][j] != 0), None)
                if j is not None:
                    self.pivot(i, j)


def _phase_one(A: Matrix, b: Sequence[Fraction]):
    """Returns ``(tableau, witness)``; ``witness`` is None when feasible."""
    tab = _Tableau(A, b)
    cost = [ZERO] * tab.n + [-ONE] * tab.m
    tab.run(cost, range(tab.n))
    if tab.objective(cost) < 0:
        return tab, tuple(-y for y in tab.dual(cost))
    tab.drive_out_artificials()
    return tab, None


def solve(prob: LpProblem) -> SolveOutcome:
    """Two-phase exact simplex with Bland's rule.

    The result is always certified: strong duality for an optimum, a Farkas
    witness for infeasibility, a recession ray for unboundedness.
    """
    tab, witness = _phase_one(prob.A, prob.b)
    if witness is not None:
        outcome = Infeasible(witness)
    else:
        cost = list(prob.p) + [ZERO] * prob.m
        enter = tab.run(cost, range(prob.n))
        if enter is not None:
            ray = [ZERO] * prob.n
            ray[enter] = ONE
            for i, k in enumerate(tab.basis):
                if k < prob.n:
                    ray[k] = -tab.T[i][enter]
            outcome = Unbounded(tuple(ray))
        else:
            x = tab.primal()
            outcome = Optimal(PrimalSolution(x, dot(prob.p, x)), DualSolution(tab.dual(cost)))
    certify_outcome(prob, outcome)
    return outcome


def certify_outcome(prob: LpProblem, outcome: SolveOutcome) -> None:
    """Exact re-check of an outcome's invariants; raises CertificateError."""
    A, b, p = prob.A, prob.b, prob.p
    if isinstance(outcome, Optimal):
        x, y = outcome.primal.x, outcome.dual.y
        if not prob.is_feasible_point(x):
            raise CertificateError("optimal x is not primal feasible")
        if outcome.primal.value != dot(p, x):
            raise CertificateError("reported value differs from p.x")
        if not prob.is_dual_feasible(y):
            raise CertificateError("dual y violates y^T A >= p^T")
        if dot(y, b) != outcome.primal.value:
            raise CertificateError("strong duality fails: y.b != p.x")
    elif isinstance(outcome, Infeasible):
        w = outcome.witness
        if len(w) != prob.m or any(a > 0 for a in vec_mat(w, A)) or not dot(w, b) > 0:
            raise CertificateError("Farkas witness fails w^T A <= 0, w.b > 0")
    elif isinstance(outcome, Unbounded):
        r = outcome.ray
        if len(r) != prob.n or not is_nonneg(r) or any(mat_vec(A, r)) or not dot(p, r) > 0:
            raise CertificateError("ray fails A r = 0, r >= 0, p.r > 0")
    else:
        raise TypeError(f"not a solve outcome: {outcome!r}")


def complementary_slackness_check(prob: LpProblem, x, y) -> bool:
    """True iff ``y . A^j == p_j`` on every column with ``x_j > 0``."""
    x, y = vector(x), vector(y)
    if not prob.is_feasible_point(x):
        raise FeasibilityError("primal", "x must satisfy A x = b, x >= 0")
    if not prob.is_dual_feasible(y):
        raise FeasibilityError("dual", "y must satisfy y^T A >= p^T")
    yA = vec_mat(y, prob.A)
    return all(yA[j] == prob.p[j] for j in range(prob.n) if x[j] > 0)


@dataclass(frozen=True)
class Weights:
    alpha: tuple
    kind = "weights"


@dataclass(frozen=True)
class Separator:
    cert: FarkasCertificate
    kind = "separator"


def farkas_separate(target, points: Sequence) -> Union[Weights, Separator]:
    """Express ``target`` as a convex combination of ``points`` or separate it.

    Runs phase 1 on ``sum a_i point_i = target, sum a_i = 1, a >= 0``. An
    infeasible phase 1 yields ``(q, beta)`` with ``q.point_i + beta <= 0``
    for all i and ``q.target + beta > 0``.
    """
    target = vector(target)
    points = [vector(pt) for pt in points]
    if not points:
        raise ValueError("farkas_separate needs at least one point")
    d = len(target)
    if any(len(pt) != d for pt in points):
        raise DimensionError("points and target differ in dimension")
    M = Matrix.from_columns([pt + (ONE,) for pt in points], rows=d + 1)
    rhs = target + (ONE,)
    tab, witness = _phase_one(M, rhs)
    if witness is None:
        result = Weights(tab.primal())
    else:
        result = Separator(FarkasCertificate(witness[:d], witness[d]))
    _check_separation(target, points, result)
    return result


def _check_separation(target, points, result) -> None:
    if isinstance(result, Weights):
        a = result.alpha
        combo = zeros(len(target))
        for ai, pt in zip(a, points):
            if ai:
                combo = tuple(c + ai * v for c, v in zip(combo, pt))
        if not is_nonneg(a) or sum(a) != 1 or combo != target:
            raise CertificateError("convex weights do not reproduce the target")
    else:
        q, beta = result.cert.q, result.cert.beta
        if any(dot(q, pt) + beta > 0 for pt in points) or not dot(q, target) + beta > 0:
            raise CertificateError("separator does not strictly separate the target")
