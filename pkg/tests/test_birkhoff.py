import random
from fractions import Fraction as F
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lpstruct.birkhoff import (
    DoublyStochastic,
    FractionalCycle,
    PermutationMatrix,
    build_constraints,
    bvn_decompose,
    ds_vertex_set,
    epsilon0,
    find_fractional_cycle,
    perturb_pair,
    vectorize,
    verify_vertex_set,
)
from lpstruct.errors import CapacityError, DimensionError, PreconditionError
from lpstruct.exact import mat_vec, rank
from lpstruct.generate import random_ds, random_fractional_ds
from oracles import basic_solutions, sym_rank

H = F(1, 2)
HALVES = [[H, H], [H, H]]
I2 = [[1, 0], [0, 1]]


def _third(n=3):
    return [[F(1, n)] * n for _ in range(n)]


def test_vectorize_examples():
    assert vectorize([[1, 2], [3, 4]]) == (1, 3, 2, 4)
    assert vectorize(I2) == (1, 0, 0, 1)
    assert vectorize([[7]]) == (7,)
    with pytest.raises(DimensionError):
        vectorize([[1, 2]])


def test_build_constraints_examples():
    s = build_constraints(2)
    assert s.E1.to_lists() == [[1, 1, 0, 0], [0, 0, 1, 1]]
    assert s.E2.to_lists() == [[1, 0, 1, 0], [0, 1, 0, 1]]
    assert s.rhs == (1, 1, 1, 1)
    s = build_constraints(1)
    assert s.E1.to_lists() == s.E2.to_lists() == [[1]] and s.rhs == (1, 1)


def test_constraints_give_column_then_row_sums():
    B = [[1, 2, 3], [4, 5, 6], [7, 8, 9]]
    s = build_constraints(3)
    assert mat_vec(s.E1, vectorize(B)) == (12, 15, 18)
    assert mat_vec(s.E2, vectorize(B)) == (6, 15, 24)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_constraint_rank_is_2n_minus_1(n):
    M = build_constraints(n).matrix
    assert rank(M) == sym_rank(M.data, M.cols) == 2 * n - 1


def test_ds_validation():
    with pytest.raises(DimensionError):
        DoublyStochastic.from_rows([[1, 0]])
    with pytest.raises(PreconditionError):
        DoublyStochastic.from_rows([[H, H], [H, F(1, 3)]])
    with pytest.raises(PreconditionError):
        DoublyStochastic.from_rows([[2, -1], [-1, 2]])
    with pytest.raises(PreconditionError):
        PermutationMatrix((0, 0))


def test_find_cycle_examples():
    assert find_fractional_cycle(HALVES).pairs == ((0, 0), (0, 1), (1, 1), (1, 0))
    with pytest.raises(PreconditionError, match="no fractional entry"):
        find_fractional_cycle(I2)
    cyc = find_fractional_cycle([[H, H, 0], [H, H, 0], [0, 0, 1]])
    assert len(cyc.pairs) == 4 and all(r < 2 and c < 2 for r, c in cyc.pairs)


def test_epsilon0_examples():
    assert epsilon0(HALVES, find_fractional_cycle(HALVES)) == H
    P = [[F(1, 4), F(3, 4)], [F(3, 4), F(1, 4)]]
    assert epsilon0(P, find_fractional_cycle(P)) == F(1, 4)
    T = _third()
    assert epsilon0(T, find_fractional_cycle(T)) == F(1, 3)


def test_epsilon0_rejects_invalid_cycle():
    with pytest.raises(PreconditionError):
        epsilon0(HALVES, FractionalCycle(((0, 0), (1, 1), (0, 1), (1, 0))))


def test_perturb_pair_examples():
    cyc = find_fractional_cycle(HALVES)
    Q1, Q2 = perturb_pair(HALVES, cyc, F(1, 4))
    q, t = F(1, 4), F(3, 4)
    assert Q1.entries == ((q, t), (t, q))
    assert Q2.entries == ((t, q), (q, t))
    with pytest.raises(PreconditionError):
        perturb_pair(HALVES, cyc, H)
    with pytest.raises(PreconditionError):
        perturb_pair(HALVES, cyc, 0)


def test_bvn_examples():
    dec = bvn_decompose(HALVES)
    assert sorted((w, p.sigma) for w, p in dec.terms) == [(H, (0, 1)), (H, (1, 0))]
    dec = bvn_decompose([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert [(w, p.sigma) for w, p in dec.terms] == [(1, (0, 1, 2))]
    dec = bvn_decompose(_third())
    assert sum(w for w, _ in dec.terms) == 1
    assert dec.reconstruct() == tuple(tuple(r) for r in _third())


def test_bvn_capacity_guard():
    with pytest.raises(CapacityError):
        bvn_decompose(_third(7))


def test_verify_vertex_set_examples():
    assert [verify_vertex_set(n) for n in (1, 2, 3)] == [True] * 3
    assert [len(ds_vertex_set(n)) for n in (1, 2, 3)] == [1, 2, 6]
    with pytest.raises(CapacityError):
        verify_vertex_set(4)


def test_vertex_set_matches_subset_oracle():
    s = build_constraints(3)
    expected = {
        vectorize(PermutationMatrix(p).entries()) for p in permutations(range(3))
    }
    assert basic_solutions(s.matrix.data, s.rhs, 9) == expected
    assert {v.x for v in ds_vertex_set(3)} == expected


@pytest.mark.parametrize("n", [2, 3, 4])
def test_every_permutation_decomposes_to_itself(n):
    for sigma in permutations(range(n)):
        dec = bvn_decompose(PermutationMatrix(sigma).entries())
        assert [(w, p.sigma) for w, p in dec.terms] == [(1, sigma)]


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 5), st.integers(0, 2**32))
def test_cycle_and_perturbation_properties(n, seed):
    P = random_fractional_ds(random.Random(seed), n)
    cyc = find_fractional_cycle(P)
    k = len(cyc.pairs)
    assert k >= 4 and k % 2 == 0 and len(set(cyc.pairs)) == k
    assert all(0 < P[r, c] < 1 for r, c in cyc.pairs)
    e0 = epsilon0(P, cyc)
    assert 0 < e0 < 1
    for eps in (e0 / 2, e0 / 7):
        Q1, Q2 = perturb_pair(P, cyc, eps)
        assert Q1 != Q2
        for i in range(n):
            for j in range(n):
                assert (Q1[i, j] + Q2[i, j]) / 2 == P[i, j]


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(0, 2**32))
def test_bvn_round_trip(n, seed):
    P = random_ds(random.Random(seed), n)
    dec = bvn_decompose(P)
    assert all(w > 0 for w, _ in dec.terms)
    assert sum(w for w, _ in dec.terms) == 1
    assert dec.reconstruct() == P.entries
    assert bvn_decompose(P) == dec
