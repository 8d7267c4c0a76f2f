"""Seeded random instances: feasible LPs and doubly stochastic matrices."""

from __future__ import annotations

import random
from fractions import Fraction

from .birkhoff import DoublyStochastic, PermutationMatrix
from .errors import CapacityError, DimensionError
from .exact import Matrix, mat_vec, vec_mat
from .lp import LpProblem

MAX_LP_ROWS = 30
MAX_LP_COLS = 30
MAX_DS_N = 6


def random_lp(rng: random.Random, m: int, n: int, bounded: bool = False):
    """Feasible-by-construction problem and its feasibility witness ``x0``.

    With ``bounded=True`` the first row has strictly positive coefficients,
    which bounds the feasible set. About a third of the objectives are
    built as ``y^T A - s`` with ``s >= 0`` sparse, which makes ties among
    optimal vertices (non-unique optima) common.
    """
    if not (1 <= n <= MAX_LP_COLS and 0 <= m <= MAX_LP_ROWS):
        raise CapacityError(f"random_lp supports m <= {MAX_LP_ROWS}, 1 <= n <= {MAX_LP_COLS}")
    if bounded and m < 1:
        raise DimensionError("a bounded instance needs at least one row")
    rows = []
    for i in range(m):
        if bounded and i == 0:
            rows.append([rng.randint(1, 3) for _ in range(n)])
        else:
            rows.append([rng.randint(-3, 3) for _ in range(n)])
    A = Matrix.from_rows(rows, cols=n)
    x0 = tuple(Fraction(rng.choice([0, 0, 1, 2, 3])) for _ in range(n))
    b = mat_vec(A, x0)
    if rng.random() < 1 / 3 and m:
        y = [rng.randint(-2, 2) for _ in range(m)]
        s = [rng.choice([0, 0, 1, 2]) for _ in range(n)]
        p = tuple(a - c for a, c in zip(vec_mat([Fraction(v) for v in y], A), s))
    else:
        p = tuple(Fraction(rng.randint(-3, 3)) for _ in range(n))
    return LpProblem(A, b, p), x0


def random_permutation(rng: random.Random, n: int) -> PermutationMatrix:
    sigma = list(range(n))
    rng.shuffle(sigma)
    return PermutationMatrix(tuple(sigma))


def random_ds(rng: random.Random, n: int, terms: int | None = None) -> DoublyStochastic:
    """Convex combination of ``terms`` random permutation matrices."""
    if not 1 <= n <= MAX_DS_N:
        raise CapacityError(f"random_ds supports 1 <= n <= {MAX_DS_N}")
    if terms is None:
        terms = rng.randint(1, n + 1)
    weights = [rng.randint(1, 9) for _ in range(terms)]
    total = sum(weights)
    out = [[Fraction(0)] * n for _ in range(n)]
    for w in weights:
        perm = random_permutation(rng, n)
        for i, j in enumerate(perm.sigma):
            out[i][j] += Fraction(w, total)
    return DoublyStochastic.from_rows(out)


def random_fractional_ds(rng: random.Random, n: int) -> DoublyStochastic:
    """Random doubly stochastic matrix that is not a permutation matrix."""
    if n < 2:
        raise DimensionError("every 1x1 doubly stochastic matrix is a permutation")
    while True:
        P = random_ds(rng, n, terms=rng.randint(2, n + 1))
        if not P.is_permutation():
            return P
