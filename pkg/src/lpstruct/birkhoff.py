"""Doubly stochastic matrices and their decomposition into permutation matrices.

A doubly stochastic matrix B is encoded as the column-stacked vector
``vec(B)``; B is doubly stochastic iff ``vec(B) >= 0`` and
``[E1; E2] vec(B) = 1``. The set is bounded with the permutation matrices
as its basic solutions, so an exact convex-hull solve over all ``n!``
permutations decomposes any member.

Row/column indices are 0-based; permutations map row -> column.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from . import lp
from .errors import CapacityError, DimensionError, InternalInconsistencyError, PreconditionError
from .exact import Matrix, as_matrix, to_rational, vector
from .vertices import enumerate_basic

ZERO = Fraction(0)
ONE = Fraction(1)

MAX_DECOMPOSE_N = 6
MAX_VERTEX_CHECK_N = 3


@dataclass(frozen=True)
class DoublyStochastic:
    n: int
    entries: tuple

    def __post_init__(self):
        rows = tuple(vector(r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        n = self.n
        if n < 1:
            raise DimensionError("doubly stochastic matrices need n >= 1")
        if len(rows) != n or any(len(r) != n for r in rows):
            raise DimensionError(f"entries are not a square {n}x{n} grid")
        for i, r in enumerate(rows):
            for j, a in enumerate(r):
                if a < 0:
                    raise PreconditionError(f"negative entry at ({i}, {j})")
            if sum(r) != 1:
                raise PreconditionError(f"row {i} sums to {sum(r)}, not 1")
        for j in range(n):
            s = sum(r[j] for r in rows)
            if s != 1:
                raise PreconditionError(f"column {j} sums to {s}, not 1")

    @classmethod
    def from_rows(cls, rows) -> "DoublyStochastic":
        rows = [list(r) for r in rows]
        return cls(len(rows), tuple(tuple(r) for r in rows))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def is_permutation(self) -> bool:
        return all(a in (0, 1) for r in self.entries for a in r)

    def matrix(self) -> Matrix:
        return Matrix(self.n, self.n, self.entries)


@dataclass(frozen=True)
class PermutationMatrix:
    sigma: tuple  # sigma[row] = column

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(int(s) for s in self.sigma))
        if sorted(self.sigma) != list(range(len(self.sigma))):
            raise PreconditionError(f"{self.sigma} is not a permutation of 0..n-1")

    @property
    def n(self) -> int:
        return len(self.sigma)

    def entries(self) -> tuple:
        n = self.n
        return tuple(tuple(ONE if self.sigma[i] == j else ZERO for j in range(n)) for i in range(n))

    def as_ds(self) -> DoublyStochastic:
        return DoublyStochastic(self.n, self.entries())


@dataclass(frozen=True)
class FractionalCycle:
    """Closed walk of (row, col) pairs; pairs[0] and pairs[1] share a row,
    pairs[1] and pairs[2] share a column, and so on around the loop."""

    pairs: tuple


@dataclass(frozen=True)
class BvnDecomposition:
    terms: tuple  # ((weight, PermutationMatrix), ...)

    def reconstruct(self) -> tuple:
        n = self.terms[0][1].n
        out = [[ZERO] * n for _ in range(n)]
        for w, perm in self.terms:
            for i, j in enumerate(perm.sigma):
                out[i][j] += w
        return tuple(tuple(r) for r in out)


@dataclass(frozen=True)
class DsConstraintSystem:
    E1: Matrix
    E2: Matrix
    rhs: tuple

    @property
    def matrix(self) -> Matrix:
        return self.E1.stack(self.E2)


def as_ds(P) -> DoublyStochastic:
    if isinstance(P, DoublyStochastic):
        return P
    return DoublyStochastic.from_rows(P)


def vectorize(B) -> tuple:
    """Stack the columns of a square matrix: entry (i, j) lands at j*n + i."""
    if isinstance(B, DoublyStochastic):
        B = B.matrix()
    B = as_matrix(B)
    if B.rows != B.cols:
        raise DimensionError(f"vectorize needs a square matrix, got {B.rows}x{B.cols}")
    return tuple(B[i, j] for j in range(B.cols) for i in range(B.rows))


def build_constraints(n: int) -> DsConstraintSystem:
    """E1 sums each stacked column block (column sums of B); E2 picks row i
    out of every block (row sums of B)."""
    if n < 1:
        raise DimensionError("n must be positive")
    E1 = [[ONE if k // n == j else ZERO for k in range(n * n)] for j in range(n)]
    E2 = [[ONE if k % n == j else ZERO for k in range(n * n)] for j in range(n)]
    return DsConstraintSystem(
        Matrix.from_rows(E1), Matrix.from_rows(E2), (ONE,) * (2 * n)
    )


def _is_fractional(a: Fraction) -> bool:
    return 0 < a < 1


def find_fractional_cycle(P) -> FractionalCycle:
    """Alternating row/column walk over fractional entries until a pair recurs.

    Starts at the first fractional entry in row-major order and always moves
    to the first qualifying entry by index. The closed loop at the end of
    the walk is returned; if it has odd length, the repeated pair is dropped,
    which leaves an even alternating loop.
    """
    P = as_ds(P)
    n = P.n
    start = next(
        ((i, j) for i in range(n) for j in range(n) if _is_fractional(P[i, j])), None
    )
    if start is None:
        raise PreconditionError("no fractional entry: the matrix is a permutation matrix")
    walk = [start]
    seen = {start: 0}
    row_step = True
    while True:
        r, s = walk[-1]
        if row_step:
            nxt = next((r, c) for c in range(n) if c != s and _is_fractional(P[r, c]))
        else:
            nxt = next((i, s) for i in range(n) if i != r and _is_fractional(P[i, s]))
        row_step = not row_step
        if nxt in seen:
            loop = walk[seen[nxt]:]
            break
        seen[nxt] = len(walk)
        walk.append(nxt)
    if len(loop) % 2:
        loop = loop[1:]
    if loop[0][0] != loop[1][0]:
        loop = loop[1:] + loop[:1]
    cyc = FractionalCycle(tuple(loop))
    _validate_cycle(P, cyc)
    return cyc


def _validate_cycle(P: DoublyStochastic, cyc: FractionalCycle) -> None:
    pairs = cyc.pairs
    k = len(pairs)
    if k < 4 or k % 2:
        raise PreconditionError(f"cycle length {k} is not even and >= 4")
    if len(set(pairs)) != k:
        raise PreconditionError("cycle revisits a pair")
    for t in range(k):
        (r1, c1), (r2, c2) = pairs[t], pairs[(t + 1) % k]
        ok = (r1 == r2 and c1 != c2) if t % 2 == 0 else (c1 == c2 and r1 != r2)
        if not ok:
            raise PreconditionError(f"cycle does not alternate rows and columns at step {t}")
    for r, c in pairs:
        if not (0 <= r < P.n and 0 <= c < P.n) or not _is_fractional(P[r, c]):
            raise PreconditionError(f"cycle entry ({r}, {c}) is not fractional")


def epsilon0(P, cyc: FractionalCycle) -> Fraction:
    """Largest admissible perturbation bound: min of p and 1 - p over the cycle."""
    P = as_ds(P)
    _validate_cycle(P, cyc)
    return min(min(P[r, c], 1 - P[r, c]) for r, c in cyc.pairs)


def perturb_pair(P, cyc: FractionalCycle, eps) -> tuple:
    """Split P into two distinct doubly stochastic matrices with midpoint P.

    The first subtracts ``eps`` at even cycle positions and adds it at odd
    ones; the second does the reverse.
    """
    P = as_ds(P)
    eps = to_rational(eps)
    bound = epsilon0(P, cyc)
    if not 0 < eps < bound:
        raise PreconditionError(f"eps = {eps} must lie strictly inside (0, {bound})")
    q1 = [list(r) for r in P.entries]
    q2 = [list(r) for r in P.entries]
    for t, (r, c) in enumerate(cyc.pairs):
        d = -eps if t % 2 == 0 else eps
        q1[r][c] += d
        q2[r][c] -= d
    Q1, Q2 = DoublyStochastic.from_rows(q1), DoublyStochastic.from_rows(q2)
    mid = tuple(
        tuple((a + b) / 2 for a, b in zip(r1, r2)) for r1, r2 in zip(Q1.entries, Q2.entries)
    )
    if Q1 == Q2 or mid != P.entries:
        raise InternalInconsistencyError("perturbed pair does not average back to P")
    return Q1, Q2


def all_permutations(n: int) -> list:
    """All n x n permutation matrices, lexicographic in sigma."""
    return [PermutationMatrix(s) for s in permutations(range(n))]


def bvn_decompose(P) -> BvnDecomposition:
    """Convex weights over all n! permutation matrices reproducing P exactly."""
    P = as_ds(P)
    if P.n > MAX_DECOMPOSE_N:
        raise CapacityError(f"bvn_decompose supports n <= {MAX_DECOMPOSE_N}, got {P.n}")
    perms = all_permutations(P.n)
    res = lp.farkas_separate(vectorize(P), [vectorize(pm.as_ds()) for pm in perms])
    if isinstance(res, lp.Separator):
        raise InternalInconsistencyError("doubly stochastic matrix outside the permutation hull")
    dec = BvnDecomposition(tuple((w, pm) for w, pm in zip(res.alpha, perms) if w > 0))
    if dec.reconstruct() != P.entries or sum(w for w, _ in dec.terms) != 1:
        raise InternalInconsistencyError("decomposition does not reconstruct P")
    return dec


def ds_vertex_set(n: int):
    """Basic solutions of ``[E1; E2] a = 1, a >= 0``."""
    if n > MAX_VERTEX_CHECK_N:
        raise CapacityError(f"vertex enumeration supports n <= {MAX_VERTEX_CHECK_N}, got {n}")
    system = build_constraints(n)
    return enumerate_basic(system.matrix, system.rhs)


def verify_vertex_set(n: int) -> bool:
    """Basic solutions of the doubly stochastic system are exactly the n! permutations."""
    if n < 1:
        raise DimensionError("n must be positive")
    if n > MAX_VERTEX_CHECK_N:
        raise CapacityError(f"vertex enumeration supports n <= {MAX_VERTEX_CHECK_N}, got {n}")
    found = {v.x for v in ds_vertex_set(n)}
    expected = {vectorize(pm.as_ds()) for pm in all_permutations(n)}
    return found == expected and len(found) == math.factorial(n)
