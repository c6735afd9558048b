"""Exact linear algebra over the rationals.

Conventions used throughout the package:

* scalars are :class:`fractions.Fraction` (arbitrary precision, kept in
  canonical form by the standard library, never rounded);
* vectors are plain tuples of ``Fraction``;
* a :class:`Matrix` acts on column vectors, i.e. a linear map ``f`` with
  matrix ``M`` satisfies ``f(e_j) = sum_i M[i][j] e_i``.

Elimination is plain rational Gauss-Jordan with canonical reduction; at the
dimensions this package targets (a handful of basis vectors) coefficient
growth is a non-issue and every result is exact.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "LinAlgError",
    "SingularMatrixError",
    "InconsistentSystemError",
    "as_rational",
    "rational_from_json",
    "rational_to_json",
    "as_vector",
    "zero_vector",
    "basis_vector",
    "vec_add",
    "vec_sub",
    "vec_scale",
    "vec_is_zero",
    "nonzero_items",
    "Matrix",
    "mat_mul",
    "rank",
    "kernel_basis",
    "inverse",
    "solve",
    "try_solve",
    "linear_combination",
    "block_diag",
]


class LinAlgError(ValueError):
    """Shape mismatch or other misuse of a linear-algebra operation."""


class SingularMatrixError(LinAlgError):
    """Raised when a matrix that must be invertible is not."""


class InconsistentSystemError(LinAlgError):
    """Raised by :func:`solve` when the linear system has no solution."""


_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def as_rational(value: int | str | Fraction) -> Fraction:
    """Coerce ``value`` to a Fraction; floats are rejected to keep exactness."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not _RATIONAL_RE.match(text):
            raise ValueError(f"not a rational literal: {value!r}")
        return Fraction(text)
    raise ValueError(f"cannot interpret {value!r} as an exact rational")


def rational_from_json(value: int | str) -> Fraction:
    """Decode the JSON form of a rational: an integer or a ``"p/q"`` string."""
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ValueError(f"expected an integer or 'p/q' string, got {value!r}")
    return as_rational(value)


def rational_to_json(value: Fraction) -> int | str:
    """Encode a rational as a JSON integer, or ``"p/q"`` when not integral."""
    if value.denominator == 1:
        return int(value)
    return f"{value.numerator}/{value.denominator}"


# ---------------------------------------------------------------------------
# vectors
# ---------------------------------------------------------------------------

def as_vector(values: Iterable[int | str | Fraction]) -> tuple[Fraction, ...]:
    return tuple(as_rational(v) for v in values)


def zero_vector(n: int) -> tuple[Fraction, ...]:
    return (Fraction(0),) * n


def basis_vector(n: int, i: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def vec_add(u: Sequence[Fraction], v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(c: Fraction, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(c * a for a in v)


def vec_is_zero(v: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in v)


def nonzero_items(v: Sequence[Fraction]) -> tuple[tuple[int, Fraction], ...]:
    """Sparse view of a vector: the (index, value) pairs with value != 0."""
    return tuple((i, a) for i, a in enumerate(v) if a != 0)


# ---------------------------------------------------------------------------
# dense exact matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix of rationals, row-major.

    Degenerate shapes (0 rows and/or 0 columns) are legal; they show up as
    boundary matrices of zero-dimensional cochain spaces.
    """

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise LinAlgError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows:
            raise LinAlgError("row count does not match entries")
        for row in self.entries:
            if len(row) != self.cols:
                raise LinAlgError("ragged rows in matrix entries")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[int | str | Fraction]],
                  cols: int | None = None) -> "Matrix":
        rows = [as_vector(row) for row in data]
        if rows:
            width = len(rows[0])
        elif cols is not None:
            width = cols
        else:
            raise LinAlgError("cannot infer column count of an empty matrix")
        if cols is not None and rows and width != cols:
            raise LinAlgError("explicit column count does not match data")
        return cls(len(rows), width, tuple(rows))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(basis_vector(n, i) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, tuple(zero_vector(cols) for _ in range(rows)))

    @classmethod
    def diagonal(cls, values: Sequence[int | str | Fraction]) -> "Matrix":
        diag = as_vector(values)
        n = len(diag)
        return cls(n, n, tuple(
            tuple(diag[i] if i == j else Fraction(0) for j in range(n))
            for i in range(n)))

    # -- basic queries -----------------------------------------------------

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_zero(self) -> bool:
        return all(a == 0 for row in self.entries for a in row)

    @property
    def is_identity(self) -> bool:
        return self.is_square and self == Matrix.identity(self.rows)

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.entries)

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i][j]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols, tuple(
            vec_add(r, s) for r, s in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols, tuple(
            vec_sub(r, s) for r, s in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return self.scale(Fraction(-1))

    def scale(self, c: int | str | Fraction) -> "Matrix":
        q = as_rational(c)
        return Matrix(self.rows, self.cols,
                      tuple(vec_scale(q, row) for row in self.entries))

    def __rmul__(self, c: int | Fraction) -> "Matrix":
        return self.scale(c)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise LinAlgError(
                f"dimension mismatch in product: {self.rows}x{self.cols} @ "
                f"{other.rows}x{other.cols}")
        cols = [other.col(j) for j in range(other.cols)]
        return Matrix(self.rows, other.cols, tuple(
            tuple(sum((a * b for a, b in zip(row, col)), Fraction(0))
                  for col in cols)
            for row in self.entries))

    def apply(self, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Image of the column vector ``v``."""
        if len(v) != self.cols:
            raise LinAlgError("vector length does not match column count")
        return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0))
                     for row in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      tuple(self.col(j) for j in range(self.cols)))

    def power(self, k: int) -> "Matrix":
        if not self.is_square:
            raise LinAlgError("matrix power requires a square matrix")
        if k < 0:
            return inverse(self).power(-k)
        result = Matrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base if k > 1 else base
            k >>= 1
        return result

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product with blocks ordered (i outer, j inner):
        ``(A kron B)[(i,j),(k,l)] = A[i][k] * B[j][l]``."""
        entries = []
        for i in range(self.rows):
            for j in range(other.rows):
                row = []
                for k in range(self.cols):
                    a = self.entries[i][k]
                    row.extend(a * b for b in other.entries[j])
                entries.append(tuple(row))
        return Matrix(self.rows * other.rows, self.cols * other.cols,
                      tuple(entries))

    def _same_shape(self, other: "Matrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise LinAlgError("matrix shapes differ")

    # -- JSON --------------------------------------------------------------

    def to_json(self) -> list[list[int | str]]:
        return [[rational_to_json(a) for a in row] for row in self.entries]

    @classmethod
    def from_json(cls, data: object, cols: int | None = None) -> "Matrix":
        if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
            raise ValueError("matrix JSON must be an array of rows")
        return cls.from_rows(
            [[rational_from_json(a) for a in row] for row in data], cols=cols)

    def __str__(self) -> str:
        body = "; ".join(" ".join(str(a) for a in row) for row in self.entries)
        return f"[{body}]"


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Exact matrix product (column-vector convention)."""
    return a @ b


def block_diag(*blocks: Matrix) -> Matrix:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    entries = [[Fraction(0)] * cols for _ in range(rows)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                entries[r0 + i][c0 + j] = b.entries[i][j]
        r0 += b.rows
        c0 += b.cols
    return Matrix(rows, cols, tuple(tuple(row) for row in entries))


def linear_combination(mats: Sequence[Matrix],
                       coeffs: Sequence[Fraction]) -> Matrix:
    """``sum_i coeffs[i] * mats[i]``; used to evaluate basis-indexed
    families of action matrices on an algebra element."""
    if len(mats) != len(coeffs):
        raise LinAlgError("coefficient count does not match matrix count")
    if not mats:
        raise LinAlgError("empty linear combination has no shape")
    rows, cols = mats[0].rows, mats[0].cols
    acc = [[Fraction(0)] * cols for _ in range(rows)]
    for m, c in zip(mats, coeffs):
        if c == 0:
            continue
        for i in range(rows):
            mrow = m.entries[i]
            arow = acc[i]
            for j in range(cols):
                if mrow[j]:
                    arow[j] += c * mrow[j]
    return Matrix(rows, cols, tuple(tuple(row) for row in acc))


# ---------------------------------------------------------------------------
# elimination-based kernels
# ---------------------------------------------------------------------------

def _rref(rows: list[list[Fraction]], width: int) -> tuple[list[list[Fraction]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot columns)."""
    pivots: list[int] = []
    r = 0
    for c in range(width):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [a * inv for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(m: Matrix) -> int:
    rows = [list(row) for row in m.entries]
    _, pivots = _rref(rows, m.cols)
    return len(pivots)


def kernel_basis(m: Matrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right null space ``{v : m @ v = 0}`` as column vectors.

    The vectors are linearly independent and there are exactly
    ``cols - rank`` of them (one per free column, that coordinate set to 1).
    """
    rows = [list(row) for row in m.entries]
    reduced, pivots = _rref(rows, m.cols)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    basis = []
    for j in free:
        v = [Fraction(0)] * m.cols
        v[j] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -reduced[r][j]
        basis.append(tuple(v))
    return basis


def inverse(m: Matrix) -> Matrix:
    if not m.is_square:
        raise LinAlgError("only square matrices can be inverted")
    n = m.rows
    rows = [list(m.entries[i]) + list(basis_vector(n, i)) for i in range(n)]
    reduced, pivots = _rref(rows, n)
    if len(pivots) != n:
        raise SingularMatrixError("matrix is singular")
    return Matrix(n, n, tuple(tuple(reduced[i][n:]) for i in range(n)))


def solve(m: Matrix, rhs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """One exact solution of ``m @ x = rhs`` (free coordinates set to 0).

    Raises :class:`InconsistentSystemError` when no solution exists.
    """
    if len(rhs) != m.rows:
        raise LinAlgError("right-hand side length does not match row count")
    rows = [list(row) + [as_rational(b)] for row, b in zip(m.entries, rhs)]
    reduced, pivots = _rref(rows, m.cols)
    consumed = len(pivots)
    for i in range(consumed, len(reduced)):
        if reduced[i][m.cols] != 0:
            raise InconsistentSystemError("linear system has no solution")
    x = [Fraction(0)] * m.cols
    for r, p in enumerate(pivots):
        x[p] = reduced[r][m.cols]
    return tuple(x)


def try_solve(m: Matrix, rhs: Sequence[Fraction]) -> tuple[Fraction, ...] | None:
    """Like :func:`solve` but returns ``None`` for inconsistent systems."""
    try:
        return solve(m, rhs)
    except InconsistentSystemError:
        return None
