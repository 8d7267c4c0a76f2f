"""Seeded instance corpora and oracle verdicts shared by the property and acceptance suites."""

import random
from fractions import Fraction

from lpstruct.exact import columns_independent, support
from lpstruct.generate import random_lp
from lpstruct.lp import LpProblem, Optimal, solve
from oracles import basic_optimal


def bounded_instance(seed: int):
    rng = random.Random(seed)
    prob, x0 = random_lp(rng, rng.randint(1, 3), rng.randint(1, 6), bounded=True)
    return rng, prob, x0


def random_convex_point(rng, points):
    w = [Fraction(rng.randint(1, 6)) for _ in points]
    total = sum(w)
    n = len(points[0])
    return tuple(sum(wi * p[j] for wi, p in zip(w, points)) / total for j in range(n))


def candidate_optima(rng, prob):
    """The solver's optimum and, when the face is not a point, an interior optimum."""
    _, ystar = basic_optimal(prob)
    ystar = sorted(ystar)
    out = [solve(prob).x]
    if len(ystar) > 1:
        out.append(random_convex_point(rng, ystar))
    return out


def face_lp_unique(prob, xbar) -> bool:
    """Unique iff the optimal face keeps every zero coordinate of xbar at 0
    and xbar's support columns are independent."""
    opt = solve(prob).value
    zero = [j for j, v in enumerate(xbar) if v == 0]
    A = [list(r) for r in prob.A.data] + [list(prob.p)]
    face = LpProblem(A, list(prob.b) + [opt], [1 if j in zero else 0 for j in range(prob.n)])
    out = solve(face)
    assert isinstance(out, Optimal)
    return out.value == 0 and columns_independent(prob.A, support(xbar))


def vertex_oracle_unique(prob) -> bool:
    return len(basic_optimal(prob)[1]) == 1
