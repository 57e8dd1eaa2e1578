"""Exact linear algebra over the rationals.

Every geometric predicate in this package (enclosing dimension,
subspace-variety membership, tangent-space dimension) reduces to the
rank of a matrix with rational entries, and a single wrong rank flips
a predicate, so nothing here is ever computed with floating point.

Rank is computed by clearing denominators row by row (which does not
change the row space) and running fraction-free Bareiss elimination on
the resulting integer matrix.  A plain rational Gaussian elimination,
``gauss_rank``, is kept as an independent cross-check; the two share
no elimination code.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

Vector = tuple  # tuple of Fraction


def as_fraction(x) -> Fraction:
    """Coerce an int, a string like '3/4', or a Fraction. Floats are rejected."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("expected an exact rational, got bool")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def as_vector(entries) -> Vector:
    return tuple(as_fraction(x) for x in entries)


class RationalMatrix:
    """Immutable dense matrix of Fractions.

    Construct from a row-major nested sequence, or use one of the
    classmethods.  Entries may be ints, Fractions or 'p/q' strings.
    """

    __slots__ = ("rows", "cols", "_m")

    def __init__(self, data, cols: int | None = None):
        m = tuple(tuple(as_fraction(x) for x in row) for row in data)
        widths = {len(row) for row in m}
        if len(widths) > 1:
            raise ValueError("rows have unequal lengths")
        width = widths.pop() if widths else (cols if cols is not None else 0)
        if cols is not None and cols != width:
            raise ValueError(f"cols={cols} does not match row width {width}")
        self.rows = len(m)
        self.cols = width
        self._m = m

    @classmethod
    def zero(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: dict) -> "RationalMatrix":
        """Build from a sparse {(row, col): value} map; missing entries are 0."""
        data = [[Fraction(0)] * cols for _ in range(rows)]
        for (i, j), v in entries.items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise ValueError(f"entry index ({i}, {j}) out of bounds")
            data[i][j] = as_fraction(v)
        return cls(data, cols=cols)

    @classmethod
    def from_columns(cls, columns, rows: int | None = None) -> "RationalMatrix":
        cols = [as_vector(c) for c in columns]
        if cols:
            heights = {len(c) for c in cols}
            if len(heights) > 1:
                raise ValueError("columns have unequal lengths")
            rows = heights.pop()
        elif rows is None:
            rows = 0
        return cls([[c[i] for c in cols] for i in range(rows)], cols=len(cols))

    def __getitem__(self, key) -> Fraction:
        i, j = key
        return self._m[i][j]

    def row(self, i: int) -> Vector:
        return self._m[i]

    def column(self, j: int) -> Vector:
        return tuple(self._m[i][j] for i in range(self.rows))

    def columns(self) -> list:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            [[self._m[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (self.rows, self.cols, self._m) == (other.rows, other.cols, other._m)

    def __repr__(self) -> str:
        return f"RationalMatrix({[list(map(str, row)) for row in self._m]})"


def _int_rows(M: RationalMatrix) -> list:
    """Rescale each row by the lcm of its denominators (rank-preserving)."""
    out = []
    for i in range(M.rows):
        row = M.row(i)
        den = 1
        for x in row:
            d = x.denominator
            den = den * d // math.gcd(den, d)
        out.append([int(x.numerator * (den // x.denominator)) for x in row])
    return out


def _bareiss(mat: list) -> tuple[int, list]:
    """Fraction-free elimination on an integer matrix (destructive).

    Returns (rank, pivot column indices).  The one-step Bareiss update
    keeps every intermediate entry equal to a minor of the input, so
    the integer divisions below are exact.
    """
    n_rows = len(mat)
    n_cols = len(mat[0]) if n_rows else 0
    r = 0
    prev = 1
    pivot_cols = []
    for col in range(n_cols):
        piv = None
        for i in range(r, n_rows):
            if mat[i][col]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            mat[r], mat[piv] = mat[piv], mat[r]
        pc = mat[r][col]
        for i in range(r + 1, n_rows):
            ric = mat[i][col]
            mrow = mat[r]
            irow = mat[i]
            for j in range(col + 1, n_cols):
                irow[j] = (pc * irow[j] - ric * mrow[j]) // prev
            irow[col] = 0
        prev = pc
        pivot_cols.append(col)
        r += 1
        if r == n_rows:
            break
    return r, pivot_cols


def rank(M: RationalMatrix) -> int:
    """Exact rank over the rationals (Bareiss elimination)."""
    return _bareiss(_int_rows(M))[0]


def image_basis(M: RationalMatrix) -> list:
    """Pivot columns of M: a basis of the column space, length = rank(M)."""
    _, pivots = _bareiss(_int_rows(M))
    return [M.column(j) for j in pivots]


def in_span(v, basis) -> bool:
    """True iff v lies in the linear span of the given vectors."""
    v = as_vector(v)
    vs = [as_vector(b) for b in basis]
    for b in vs:
        if len(b) != len(v):
            raise ValueError("vectors of unequal length")
    if not vs:
        return all(x == 0 for x in v)
    r0 = rank(RationalMatrix.from_columns(vs))
    r1 = rank(RationalMatrix.from_columns(vs + [v]))
    return r0 == r1


def gauss_rank(M: RationalMatrix) -> int:
    """Rank by naive rational Gaussian elimination.

    Reference implementation used only to cross-check the Bareiss path.
    """
    m = [list(M.row(i)) for i in range(M.rows)]
    n_rows, n_cols = M.rows, M.cols
    r = 0
    for col in range(n_cols):
        piv = None
        for i in range(r, n_rows):
            if m[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == n_rows:
            break
    return r


def lin_indep(vectors) -> bool:
    vs = [as_vector(v) for v in vectors]
    if not vs:
        return True
    return rank(RationalMatrix.from_columns(vs)) == len(vs)


def inverse(M: RationalMatrix) -> RationalMatrix:
    """Exact inverse of a square matrix; raises ValueError if singular."""
    if M.rows != M.cols:
        raise ValueError("inverse of a non-square matrix")
    n = M.rows
    a = [list(M.row(i)) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = None
        for i in range(col, n):
            if a[i][col] != 0:
                piv = i
                break
        if piv is None:
            raise ValueError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return RationalMatrix([row[n:] for row in a])


def exact_det(rows) -> Fraction:
    """Determinant of a small square matrix given as nested sequences."""
    m = [[as_fraction(x) for x in row] for row in rows]
    n = len(m)
    for row in m:
        if len(row) != n:
            raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    # scale rows to integers, run integer Bareiss, divide the scale back out
    scale = Fraction(1)
    im = []
    for row in m:
        den = 1
        for x in row:
            d = x.denominator
            den = den * d // math.gcd(den, d)
        scale *= den
        im.append([int(x.numerator * (den // x.denominator)) for x in row])
    sign = 1
    prev = 1
    for col in range(n - 1):
        piv = None
        for i in range(col, n):
            if im[i][col]:
                piv = i
                break
        if piv is None:
            return Fraction(0)
        if piv != col:
            im[col], im[piv] = im[piv], im[col]
            sign = -sign
        pc = im[col][col]
        for i in range(col + 1, n):
            ric = im[i][col]
            for j in range(col + 1, n):
                im[i][j] = (pc * im[i][j] - ric * im[col][j]) // prev
            im[i][col] = 0
        prev = pc
    return Fraction(sign * im[n - 1][n - 1]) / scale


def int_det(rows) -> int:
    """Determinant of an integer matrix (Bareiss, pure int arithmetic)."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if n == 3:
        a, b, c = rows[0]
        d, e, f = rows[1]
        g, h, i = rows[2]
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    im = [list(r) for r in rows]
    sign = 1
    prev = 1
    for col in range(n - 1):
        piv = None
        for i in range(col, n):
            if im[i][col]:
                piv = i
                break
        if piv is None:
            return 0
        if piv != col:
            im[col], im[piv] = im[piv], im[col]
            sign = -sign
        pc = im[col][col]
        for i in range(col + 1, n):
            ric = im[i][col]
            for j in range(col + 1, n):
                im[i][j] = (pc * im[i][j] - ric * im[col][j]) // prev
            im[i][col] = 0
        prev = pc
    return sign * im[n - 1][n - 1]


def random_matrix(rows: int, cols: int, rng: random.Random, lo: int = -9, hi: int = 9) -> RationalMatrix:
    """Seeded random integer matrix with entries uniform in [lo, hi]."""
    return RationalMatrix([[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)])
