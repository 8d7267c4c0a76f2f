import random
from fractions import Fraction as F
from itertools import combinations

import pytest

from lpstruct.errors import CapacityError, FeasibilityError, NotOptimalError
from lpstruct.exact import Matrix, columns_independent, dot, mat_vec, rank, support
from lpstruct.generate import random_lp
from lpstruct.lp import LpProblem, Unbounded, solve
from lpstruct.vertices import (
    Bounded,
    UnboundedRay,
    enumerate_basic,
    enumerate_basic_optimal,
    is_bounded,
    is_extreme,
)
from oracles import basic_solutions


def test_enumerate_basic_examples():
    assert enumerate_basic([[1, 1]], [1]).points() == [(0, 1), (1, 0)]
    assert enumerate_basic([[1, 0]], [1]).points() == [(1, 0)]
    assert enumerate_basic([[1]], [0]).points() == [(0,)]


def test_enumerate_basic_infeasible_is_empty():
    assert len(enumerate_basic([[1, 1]], [-1])) == 0


def test_enumerate_capacity_guard():
    with pytest.raises(CapacityError):
        enumerate_basic(Matrix.zero(1, 31), [0])


def test_degenerate_vertex_found_once():
    # x = (1, 0, 0) is reachable from supports {0}, {0,1}, {0,2}
    vs = enumerate_basic([[1, 1, 0], [1, 0, 1]], [1, 1])
    xs = vs.points()
    assert len(xs) == len(set(xs))
    assert (1, 0, 0) in xs


def test_enumerate_basic_optimal_examples():
    assert enumerate_basic_optimal(LpProblem([[1, 0]], [1], [1, 0])).points() == [(1, 0)]
    assert enumerate_basic_optimal(LpProblem([[1, 1]], [1], [1, 1])).points() == [(0, 1), (1, 0)]
    assert enumerate_basic_optimal(LpProblem([[1, 1]], [1], [2, 1])).points() == [(1, 0)]


def test_enumerate_basic_optimal_rejects_unbounded():
    with pytest.raises(NotOptimalError) as err:
        enumerate_basic_optimal(LpProblem([[1, -1]], [1], [0, 1]))
    assert isinstance(err.value.outcome, Unbounded)


def test_is_bounded_examples():
    verdict = is_bounded([[1, 0]], [1])
    assert verdict == UnboundedRay((0, 1))
    assert is_bounded([[1, 1]], [1]) == Bounded()
    assert is_bounded(Matrix.identity(2), [1, 1]) == Bounded()
    with pytest.raises(FeasibilityError):
        is_bounded([[1, 1]], [-1])


def test_is_extreme_examples():
    assert is_extreme([[1, 1]], [1], [1, 0])
    assert not is_extreme([[1, 1]], [1], [F(1, 2), F(1, 2)])
    assert is_extreme([[1, -1]], [0], [0, 0])
    with pytest.raises(FeasibilityError):
        is_extreme([[1, 1]], [1], [1, 1])


def _instance(seed, bounded):
    rng = random.Random(seed)
    return rng, *random_lp(rng, rng.randint(1, 3), rng.randint(1, 6), bounded=bounded)


@pytest.mark.parametrize("k", range(30))
def test_enumeration_matches_subset_oracle(k):
    rng, prob, _ = _instance(500 + k, bounded=k % 2 == 0)
    vs = enumerate_basic(prob.A, prob.b)
    assert set(vs.points()) == basic_solutions(prob.A.data, prob.b, prob.n)
    assert vs.points() == sorted(vs.points())
    independent = sum(
        1
        for r in range(rank(prob.A) + 1)
        for S in combinations(range(prob.n), r)
        if columns_independent(prob.A, S)
    )
    assert len(vs) <= independent
    for v in vs:
        assert v.support == support(v.x)
        assert mat_vec(prob.A, v.x) == prob.b
        assert columns_independent(prob.A, v.support)


@pytest.mark.parametrize("k", range(30))
def test_basic_optimal_subset_and_value(k):
    rng, prob, _ = _instance(700 + k, bounded=True)
    X = set(enumerate_basic(prob.A, prob.b).points())
    Y = enumerate_basic_optimal(prob).points()
    assert Y and set(Y) <= X
    assert solve(prob).value == max(dot(prob.p, x) for x in X)
    assert is_bounded(prob.A, prob.b) == Bounded()


@pytest.mark.parametrize("k", range(20))
def test_basic_solutions_are_extreme(k):
    # no vertex is a proper convex combination of two distinct sampled feasible points
    rng, prob, x0 = _instance(900 + k, bounded=True)
    X = enumerate_basic(prob.A, prob.b).points()
    samples = set(X) | {x0}
    for _ in range(6):
        w = [F(rng.randint(0, 4)) for _ in X]
        if sum(w):
            samples.add(tuple(sum(wi * x[j] for wi, x in zip(w, X)) / sum(w) for j in range(prob.n)))
    samples = sorted(samples)
    for v in X:
        assert is_extreme(prob.A, prob.b, v)
        for x1, x2 in combinations(samples, 2):
            for a in (F(1, 4), F(1, 2), F(3, 4)):
                mix = tuple(a * s + (1 - a) * t for s, t in zip(x1, x2))
                assert mix != v
