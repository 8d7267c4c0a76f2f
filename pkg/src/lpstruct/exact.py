"""Exact rational vectors, matrices and Gaussian elimination.

Scalars are :class:`fractions.Fraction`. Vectors are plain tuples of
fractions; matrices are :class:`Matrix`, an immutable row-major grid that
also carries its shape so that 0-row and 0-column matrices are legal.

Column and row indices are 0-based throughout the Python API.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence

from .errors import DimensionError

Rational = Fraction
Vector = tuple  # tuple[Fraction, ...]


def to_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected: they would silently import binary rounding.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {value!r}") from exc
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def vector(values: Iterable) -> tuple:
    return tuple(to_rational(v) for v in values)


def zeros(n: int) -> tuple:
    return (Fraction(0),) * n


def unit(n: int, j: int) -> tuple:
    return tuple(Fraction(1 if i == j else 0) for i in range(n))


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise DimensionError(f"dot of lengths {len(u)} and {len(v)}")
    return sum((a * b for a, b in zip(u, v) if a and b), Fraction(0))


def add(u, v) -> tuple:
    if len(u) != len(v):
        raise DimensionError(f"add of lengths {len(u)} and {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v) -> tuple:
    if len(u) != len(v):
        raise DimensionError(f"sub of lengths {len(u)} and {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v) -> tuple:
    c = to_rational(c)
    return tuple(c * a for a in v)


def is_nonneg(v) -> bool:
    return all(a >= 0 for a in v)


def is_zero(v) -> bool:
    return all(a == 0 for a in v)


def support(v) -> tuple:
    """Indices of strictly positive entries."""
    return tuple(j for j, a in enumerate(v) if a > 0)


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    data: tuple  # tuple of row tuples

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("negative matrix shape")
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise DimensionError(f"grid does not have shape {self.rows}x{self.cols}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], cols: int | None = None) -> "Matrix":
        data = tuple(vector(r) for r in rows)
        if cols is None:
            if not data:
                raise DimensionError("column count required for a 0-row matrix")
            cols = len(data[0])
        return cls(len(data), cols, data)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        columns = [vector(c) for c in columns]
        if rows is None:
            if not columns:
                raise DimensionError("row count required for a 0-column matrix")
            rows = len(columns[0])
        if any(len(c) != rows for c in columns):
            raise DimensionError("ragged columns")
        data = tuple(tuple(c[i] for c in columns) for i in range(rows))
        return cls(rows, len(columns), data)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(unit(n, i) for i in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, tuple(zeros(cols) for _ in range(rows)))

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> tuple:
        return self.data[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.data)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, tuple(self.column(j) for j in range(self.cols)))

    def select_columns(self, idx: Sequence[int]) -> "Matrix":
        for j in idx:
            if not 0 <= j < self.cols:
                raise IndexError(f"column index {j} out of range for {self.cols} columns")
        return Matrix(self.rows, len(idx), tuple(tuple(r[j] for j in idx) for r in self.data))

    def stack(self, other: "Matrix") -> "Matrix":
        """Vertical concatenation."""
        if self.cols != other.cols:
            raise DimensionError("stacking matrices with different column counts")
        return Matrix(self.rows + other.rows, self.cols, self.data + other.data)

    def to_lists(self) -> list:
        return [list(r) for r in self.data]


def as_matrix(M) -> Matrix:
    if isinstance(M, Matrix):
        return M
    return Matrix.from_rows(M)


def mat_vec(M: Matrix, v: Sequence[Fraction]) -> tuple:
    if len(v) != M.cols:
        raise DimensionError(f"matrix with {M.cols} columns times vector of length {len(v)}")
    return tuple(dot(r, v) for r in M.data)


def vec_mat(y: Sequence[Fraction], M: Matrix) -> tuple:
    """Row vector times matrix, ``y^T M``."""
    if len(y) != M.rows:
        raise DimensionError(f"vector of length {len(y)} times matrix with {M.rows} rows")
    out = [Fraction(0)] * M.cols
    for yi, r in zip(y, M.data):
        if yi:
            for j, a in enumerate(r):
                if a:
                    out[j] += yi * a
    return tuple(out)


def _rref(M: Matrix, rhs: Sequence[Fraction] | None = None):
    """Reduced row echelon form with first-nonzero pivoting in column order.

    Returns ``(rows, pivots, rhs)`` where ``pivots[k]`` is the pivot column
    of row ``k``.
    """
    a = [list(r) for r in M.data]
    t = list(rhs) if rhs is not None else None
    pivots = []
    r = 0
    for c in range(M.cols):
        if r == M.rows:
            break
        piv = next((i for i in range(r, M.rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
            if t is not None:
                t[r], t[piv] = t[piv], t[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        if t is not None:
            t[r] *= inv
        for i in range(M.rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
                if t is not None:
                    t[i] -= f * t[r]
        pivots.append(c)
        r += 1
    return a, pivots, t


def rank(M) -> int:
    M = as_matrix(M)
    return len(_rref(M)[1])


def columns_independent(M, idx: Iterable[int]) -> bool:
    M = as_matrix(M)
    idx = list(idx)
    if not idx:
        return True
    return rank(M.select_columns(idx)) == len(idx)


def solve_exact(M, rhs: Sequence) -> tuple | None:
    """One exact solution of ``M z = rhs``, or ``None`` if inconsistent.

    Free variables are set to zero; pivots are taken leftmost first, so the
    result is reproducible.
    """
    M = as_matrix(M)
    rhs = vector(rhs)
    if len(rhs) != M.rows:
        raise DimensionError(f"rhs of length {len(rhs)} for {M.rows} rows")
    _, pivots, t = _rref(M, rhs)
    if any(t[i] != 0 for i in range(len(pivots), M.rows)):
        return None
    z = [Fraction(0)] * M.cols
    for k, c in enumerate(pivots):
        z[c] = t[k]
    return tuple(z)


def null_space_basis(M) -> list:
    """Basis of ``{z | M z = 0}``, one vector per free column."""
    M = as_matrix(M)
    a, pivots, _ = _rref(M)
    pivot_set = set(pivots)
    basis = []
    for f in range(M.cols):
        if f in pivot_set:
            continue
        z = [Fraction(0)] * M.cols
        z[f] = Fraction(1)
        for k, c in enumerate(pivots):
            z[c] = -a[k][f]
        basis.append(tuple(z))
    return basis
