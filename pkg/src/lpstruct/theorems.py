"""Certificate-producing checks for structural facts about standard-form LPs.

* non-substitution: an optimum's dual stays optimal when ``b`` is replaced
  by ``A x*`` for any ``x*`` supported inside the optimum's support;
* uniqueness of an optimum, decided on the cone of feasible directions;
* stability of an optimum under small objective perturbations;
* decomposition of an optimal point into basic optimal solutions;
* the interval-matrix sandwich for equality rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from . import lp
from .errors import (
    DimensionError,
    FeasibilityError,
    InternalInconsistencyError,
    NotOptimalError,
    OrderingError,
    PreconditionError,
    UnboundedFeasibleSetError,
)
from .exact import (
    Matrix,
    add,
    as_matrix,
    columns_independent,
    dot,
    is_nonneg,
    is_zero,
    mat_vec,
    null_space_basis,
    scale,
    support,
    to_rational,
    vec_mat,
    vector,
    zeros,
)
from .vertices import Bounded, VertexSet, enumerate_basic_optimal, is_bounded

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class ZeroSet:
    indices: tuple


@dataclass(frozen=True)
class Unique:
    kind = "unique"


@dataclass(frozen=True)
class NotUnique:
    witness: tuple
    kind = "not_unique"


UniquenessVerdict = Union[Unique, NotUnique]


@dataclass(frozen=True)
class NonsubCertificate:
    bstar: tuple
    ybar: tuple
    value: Fraction  # optimal value of the substituted problem, = p.x*


@dataclass(frozen=True)
class FaceDecomposition:
    vertices: VertexSet
    weights: tuple


@dataclass(frozen=True)
class IntervalData:
    A_minus: Matrix
    A_plus: Matrix

    def __post_init__(self):
        object.__setattr__(self, "A_minus", as_matrix(self.A_minus))
        object.__setattr__(self, "A_plus", as_matrix(self.A_plus))
        if self.A_minus.shape != self.A_plus.shape:
            raise DimensionError("interval bounds differ in shape")


@dataclass(frozen=True)
class PerturbationResult:
    holds: bool
    reason: str
    optimal_value: Fraction | None = None

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class IntervalCheck:
    holds: bool
    violating_row: int | None = None

    def __bool__(self):
        return self.holds


def _point(x) -> tuple:
    if isinstance(x, lp.PrimalSolution):
        return x.x
    return vector(x)


def zero_set(xbar) -> ZeroSet:
    xbar = _point(xbar)
    if not is_nonneg(xbar):
        raise PreconditionError("zero_set needs a nonnegative vector")
    return ZeroSet(tuple(j for j, v in enumerate(xbar) if v == 0))


def _require_optimal(prob: lp.LpProblem, x) -> lp.Optimal:
    if not prob.is_feasible_point(x):
        raise FeasibilityError("primal", "candidate optimum violates A x = b, x >= 0")
    outcome = lp.solve(prob)
    if not isinstance(outcome, lp.Optimal):
        raise NotOptimalError(f"problem has no optimum ({outcome.kind})", outcome=outcome)
    gap = outcome.value - dot(prob.p, x)
    if gap != 0:
        raise NotOptimalError(f"point is not optimal: value gap {gap}", outcome=outcome, gap=gap)
    return outcome


def nonsub_verify(prob: lp.LpProblem, xbar, xstar) -> NonsubCertificate:
    """Certify that ``xstar`` solves ``max p.x s.t. A x = A xstar, x >= 0``.

    The dual of the original problem is reused: it stays dual feasible, and
    complementary slackness on the support of ``xbar`` carries over to
    ``xstar``. An independent solve of the substituted problem cross-checks
    the value.
    """
    x_bar = _point(xbar)
    xstar = vector(xstar)
    if len(xstar) != prob.n or not is_nonneg(xstar):
        raise PreconditionError("xstar must be a nonnegative n-vector")
    outside = set(support(xstar)) - set(support(x_bar))
    if outside:
        raise PreconditionError(
            f"support of xstar leaves the support of xbar at columns {sorted(outside)}"
        )
    outcome = _require_optimal(prob, x_bar)
    ybar = outcome.dual.y
    if not lp.complementary_slackness_check(prob, x_bar, ybar):
        raise InternalInconsistencyError("optimal pair violates complementary slackness")
    bstar = mat_vec(prob.A, xstar)
    slack = tuple(a - c for a, c in zip(vec_mat(ybar, prob.A), prob.p))
    if any(s < 0 for s in slack):
        raise InternalInconsistencyError("reused dual is not feasible")
    if dot(slack, xstar) != 0 or dot(ybar, bstar) != dot(prob.p, xstar):
        raise InternalInconsistencyError("non-substitution identity failed")
    p2 = lp.solve(prob.with_rhs(bstar))
    if not isinstance(p2, lp.Optimal) or p2.value != dot(prob.p, xstar):
        raise InternalInconsistencyError("substituted problem optimum differs from p.x*")
    return NonsubCertificate(bstar, ybar, p2.value)


def _direction_lp(A: Matrix, signed: Sequence[int], extra_rows, extra_rhs, objective, slack_rows=()):
    """LP over directions h with ``h_j >= 0`` for j in ``signed``, others free.

    Free coordinates are split as ``u - v``. ``extra_rows`` are n-vectors of
    additional equality rows; rows whose index is in ``slack_rows`` get a
    nonnegative slack, turning them into ``<=``. Returns the problem and a
    function mapping its solution back to h.
    """
    n = A.cols
    signed = set(signed)
    cols = []  # (original index, sign)
    for j in range(n):
        cols.append((j, ONE))
        if j not in signed:
            cols.append((j, -ONE))
    rows = [list(r) for r in A.data] + [list(vector(r)) for r in extra_rows]
    rhs = zeros(A.rows) + vector(extra_rhs)
    slack_rows = [A.rows + k for k in slack_rows]
    data = []
    for i, r in enumerate(rows):
        data.append([s * r[j] for j, s in cols] + [ONE if i == sr else ZERO for sr in slack_rows])
    obj = [s * objective[j] for j, s in cols] + [ZERO] * len(slack_rows)
    prob = lp.LpProblem(Matrix.from_rows(data, cols=len(obj)), rhs, obj)

    def lift(z) -> tuple:
        h = [ZERO] * n
        for (j, s), v in zip(cols, z):
            h[j] += s * v
        return tuple(h)

    return prob, lift


def _check_witness(prob: lp.LpProblem, zeros_: Sequence[int], h) -> None:
    if (
        is_zero(h)
        or any(mat_vec(prob.A, h))
        or any(h[j] < 0 for j in zeros_)
        or dot(prob.p, h) < 0
    ):
        raise InternalInconsistencyError(f"uniqueness witness fails its certificate: {h}")


def decide_unique(prob: lp.LpProblem, xbar) -> UniquenessVerdict:
    """Decide whether the optimum ``xbar`` is the only optimal solution.

    ``xbar`` is unique iff h = 0 is the only maximizer of ``p.h`` over
    ``A h = 0, h_j >= 0 (x_j = 0)``. If the support columns are dependent,
    a null vector on the support is a witness. Otherwise every nonzero
    direction has positive mass on the zero set, so it suffices to solve the
    LP normalized by ``sum_{x_j = 0} h_j = 1``.
    """
    x = _point(xbar)
    _require_optimal(prob, x)
    Z = zero_set(x).indices
    S = support(x)
    if not columns_independent(prob.A, S):
        v = null_space_basis(prob.A.select_columns(S))[0]
        h = [ZERO] * prob.n
        for j, vj in zip(S, v):
            h[j] = vj
        h = tuple(h)
        if dot(prob.p, h) < 0:
            h = scale(-1, h)
        _check_witness(prob, Z, h)
        return NotUnique(h)
    if not Z:
        return Unique()
    norm = [ONE if j in Z else ZERO for j in range(prob.n)]
    cone, lift = _direction_lp(prob.A, Z, [norm], [ONE], prob.p)
    outcome = lp.solve(cone)
    if isinstance(outcome, lp.Optimal) and outcome.value >= 0:
        h = lift(outcome.x)
        _check_witness(prob, Z, h)
        return NotUnique(h)
    if isinstance(outcome, lp.Unbounded):
        raise InternalInconsistencyError("normalized direction LP is unbounded at an optimum")
    return Unique()


def perturbation_holds(prob: lp.LpProblem, xbar, q, delta) -> PerturbationResult:
    """Is ``xbar`` still optimal for the objective ``p + delta q``?"""
    x = _point(xbar)
    q = vector(q)
    delta = to_rational(delta)
    if len(q) != prob.n or is_zero(q):
        raise PreconditionError("q must be a nonzero n-vector")
    if not delta > 0:
        raise PreconditionError("delta must be positive")
    if not prob.is_feasible_point(x):
        raise FeasibilityError("primal", "xbar violates A x = b, x >= 0")
    perturbed = prob.with_objective(add(prob.p, scale(delta, q)))
    outcome = lp.solve(perturbed)
    if isinstance(outcome, lp.Unbounded):
        return PerturbationResult(False, "perturbed problem is unbounded")
    value = outcome.value
    if dot(perturbed.p, x) == value:
        return PerturbationResult(True, "xbar attains the perturbed optimum", value)
    return PerturbationResult(False, "perturbed optimum exceeds the value at xbar", value)


def appa_alternative_test(prob: lp.LpProblem, xbar) -> UniquenessVerdict:
    """Uniqueness test for a basic optimum via ``max q.h`` on the optimal cone.

    With ``q`` the indicator of the zero set of ``xbar``, ``xbar`` is unique
    iff the optimal value of ``max q.h`` over ``A h = 0, p.h = 0,
    h_j >= 0 (x_j = 0)`` is 0. The cone is cut by ``q.h <= 1``.
    """
    x = _point(xbar)
    if not columns_independent(prob.A, support(x)):
        raise PreconditionError(
            "xbar is not basic; use decide_unique, which has no basicness requirement"
        )
    _require_optimal(prob, x)
    Z = zero_set(x).indices
    q = tuple(ONE if j in Z else ZERO for j in range(prob.n))
    cone, lift = _direction_lp(prob.A, Z, [prob.p, q], [ZERO, ONE], q, slack_rows=[1])
    outcome = lp.solve(cone)
    if outcome.value == 0:
        return Unique()
    h = lift(outcome.x)
    _check_witness(prob, Z, h)
    return NotUnique(h)


def is_optimal_point(prob: lp.LpProblem, y) -> bool:
    y = vector(y)
    if not prob.is_feasible_point(y):
        return False
    outcome = lp.solve(prob)
    return isinstance(outcome, lp.Optimal) and outcome.value == dot(prob.p, y)


def optimal_face_decompose(prob: lp.LpProblem, y) -> FaceDecomposition:
    """Write an optimal point as a convex combination of basic optimal solutions."""
    y = vector(y)
    verdict = is_bounded(prob.A, prob.b)
    if not isinstance(verdict, Bounded):
        raise UnboundedFeasibleSetError(verdict.r)
    _require_optimal(prob, y)
    ystar = enumerate_basic_optimal(prob)
    res = lp.farkas_separate(y, ystar.points())
    if isinstance(res, lp.Separator):
        raise InternalInconsistencyError(
            "optimal point separated from the basic optimal solutions of a bounded problem"
        )
    return FaceDecomposition(ystar, res.alpha)


def check_interval_relaxation(A, iv: IntervalData, b, x) -> IntervalCheck:
    """Check ``A_minus_i . x <= b_i <= A_plus_i . x`` on every row with ``A_i . x = b_i``."""
    A = as_matrix(A)
    b, x = vector(b), vector(x)
    if iv.A_minus.shape != A.shape:
        raise DimensionError("interval bounds do not match the shape of A")
    if not is_nonneg(x):
        raise PreconditionError("x must be nonnegative")
    for i in range(A.rows):
        for j in range(A.cols):
            if not iv.A_minus[i, j] <= A[i, j] <= iv.A_plus[i, j]:
                raise OrderingError(i, j)
    for i in range(A.rows):
        if dot(A.row(i), x) == b[i]:
            if not dot(iv.A_minus.row(i), x) <= b[i] <= dot(iv.A_plus.row(i), x):
                return IntervalCheck(False, i)
    return IntervalCheck(True)
