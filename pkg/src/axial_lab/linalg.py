"""Dense exact matrices over any field from :mod:`axial_lab.scalars`.

Vectors are plain tuples of scalars. Every routine is exact; pivots are the
first nonzero entry found scanning down the current column.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Callable, Iterable, Sequence

from .scalars import Field, FunctionField, RationalField

Vector = tuple


class LinAlgError(Exception):
    pass


class NotSquare(LinAlgError):
    pass


class DimensionMismatch(LinAlgError, ValueError):
    pass


class Matrix:
    """Immutable rectangular matrix; rows are tuples of field elements."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Sequence], field: Field, ncols: int | None = None):
        rows = tuple(tuple(field(x) for x in row) for row in rows)
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise DimensionMismatch("ragged rows")
        self.field = field
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = widths.pop() if widths else (ncols or 0)

    @classmethod
    def _raw(cls, rows, field, ncols):
        m = cls.__new__(cls)
        m.field, m.rows, m.nrows, m.ncols = field, rows, len(rows), ncols
        return m

    @classmethod
    def identity(cls, n: int, field: Field) -> Matrix:
        one, zero = field.one, field.zero
        return cls._raw(tuple(tuple(one if i == j else zero for j in range(n))
                              for i in range(n)), field, n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int, field: Field) -> Matrix:
        zero = field.zero
        return cls._raw(tuple((zero,) * ncols for _ in range(nrows)), field, ncols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], field: Field, nrows: int | None = None) -> Matrix:
        if not columns:
            return cls._raw(tuple(() for _ in range(nrows or 0)), field, 0)
        return cls(zip(*columns), field)

    @classmethod
    def diagonal(cls, entries: Sequence, field: Field) -> Matrix:
        n = len(entries)
        zero = field.zero
        return cls._raw(tuple(tuple(field(entries[i]) if i == j else zero for j in range(n))
                              for i in range(n)), field, n)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def row(self, i: int) -> Vector:
        return self.rows[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> Matrix:
        return Matrix._raw(tuple(zip(*self.rows)) if self.nrows else tuple(),
                           self.field, self.nrows)

    T = property(transpose)

    def _check_same(self, other: Matrix):
        if not isinstance(other, Matrix) or other.shape != self.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {getattr(other, 'shape', None)}")

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same(other)
        return Matrix._raw(tuple(tuple(x + y for x, y in zip(r, s))
                                 for r, s in zip(self.rows, other.rows)), self.field, self.ncols)

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_same(other)
        return Matrix._raw(tuple(tuple(x - y for x, y in zip(r, s))
                                 for r, s in zip(self.rows, other.rows)), self.field, self.ncols)

    def __neg__(self) -> Matrix:
        return Matrix._raw(tuple(tuple(-x for x in r) for r in self.rows), self.field, self.ncols)

    def scale(self, s) -> Matrix:
        s = self.field(s)
        return Matrix._raw(tuple(tuple(s * x for x in r) for r in self.rows), self.field, self.ncols)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.ncols:
            raise DimensionMismatch(f"matrix has {self.ncols} columns, vector has {len(v)} entries")
        zero = self.field.zero
        return tuple(_dot(r, v, zero) for r in self.rows)

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return self.apply(other)
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        cols = other.columns()
        return Matrix._raw(tuple(tuple(_dot(r, c, self.field.zero) for c in cols)
                                 for r in self.rows), self.field, other.ncols)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def is_symmetric(self) -> bool:
        return self.nrows == self.ncols and all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.nrows) for j in range(i + 1, self.ncols))

    def map(self, fn: Callable, field: Field | None = None) -> Matrix:
        field = field or self.field
        return Matrix((tuple(fn(x) for x in r) for r in self.rows), field)

    def to_json(self) -> list[list[str]]:
        return [[self.field.format(x) for x in r] for r in self.rows]

    @classmethod
    def from_json(cls, data: list[list[str]], field: Field) -> Matrix:
        return cls(([field.parse(x) for x in r] for r in data), field)

    def __repr__(self):
        body = "; ".join(", ".join(self.field.format(x) for x in r) for r in self.rows)
        return f"Matrix([{body}])"


def _dot(r: Sequence, v: Sequence, zero):
    acc = zero
    for x, y in zip(r, v):
        if x != 0 and y != 0:
            acc = acc + x * y
    return acc


def rref(m: Matrix) -> tuple[Matrix, int, list[int]]:
    rows = [list(r) for r in m.rows]
    pivots: list[int] = []
    r = 0
    for c in range(m.ncols):
        if r == m.nrows:
            break
        p = next((i for i in range(r, m.nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = m.field.one / rows[r][c]
        rows[r] = [x * inv if x != 0 else x for x in rows[r]]
        pivot_row = rows[r]
        for i in range(m.nrows):
            f = rows[i][c]
            if i != r and f != 0:
                rows[i] = [x - f * y if y != 0 else x for x, y in zip(rows[i], pivot_row)]
        pivots.append(c)
        r += 1
    return Matrix._raw(tuple(tuple(row) for row in rows), m.field, m.ncols), r, pivots


def rank(m: Matrix) -> int:
    return rref(m)[1]


def kernel_basis(m: Matrix) -> list[Vector]:
    reduced, rk, pivots = rref(m)
    zero, one = m.field.zero, m.field.one
    free = [j for j in range(m.ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [zero] * m.ncols
        v[f] = one
        for i, p in enumerate(pivots):
            v[p] = -reduced[i, f]
        basis.append(tuple(v))
    return basis


def solve(m: Matrix, b: Sequence) -> Vector | None:
    """Particular solution of ``m x = b`` with free variables zero, or None."""
    if len(b) != m.nrows:
        raise DimensionMismatch(f"{m.nrows} rows but right-hand side of length {len(b)}")
    aug = Matrix._raw(tuple(tuple(r) + (m.field(x),) for r, x in zip(m.rows, b)),
                      m.field, m.ncols + 1)
    reduced, rk, pivots = rref(aug)
    if pivots and pivots[-1] == m.ncols:
        return None
    x = [m.field.zero] * m.ncols
    for i, p in enumerate(pivots):
        x[p] = reduced[i, m.ncols]
    return tuple(x)


def inverse(m: Matrix) -> Matrix:
    if m.nrows != m.ncols:
        raise NotSquare(f"shape {m.shape}")
    n = m.nrows
    eye = Matrix.identity(n, m.field)
    aug = Matrix._raw(tuple(r + e for r, e in zip(m.rows, eye.rows)), m.field, 2 * n)
    reduced, rk, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise LinAlgError("matrix is singular")
    return Matrix._raw(tuple(r[n:] for r in reduced.rows), m.field, n)


def _bareiss(rows: list[list], exquo: Callable, zero, one):
    """Fraction-free elimination in an integral domain; returns the determinant."""
    n = len(rows)
    sign = 1
    prev = one
    for k in range(n - 1):
        p = next((i for i in range(k, n) if rows[i][k] != 0), None)
        if p is None:
            return zero
        if p != k:
            rows[k], rows[p] = rows[p], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, n):
            rik = rows[i][k]
            row_i, row_k = rows[i], rows[k]
            for j in range(k + 1, n):
                row_i[j] = exquo(pivot * row_i[j] - rik * row_k[j], prev)
            row_i[k] = zero
        prev = pivot
    det = rows[n - 1][n - 1]
    return det if sign == 1 else -det


def determinant(m: Matrix):
    """Exact determinant by Bareiss elimination after clearing denominators."""
    if m.nrows != m.ncols:
        raise NotSquare(f"shape {m.shape}")
    field = m.field
    if m.nrows == 0:
        return field.one
    if isinstance(field, RationalField):
        scale = 1
        rows = []
        for r in m.rows:
            d = lcm(*(Fraction(x).denominator for x in r))
            scale *= d
            rows.append([int(Fraction(x) * d) for x in r])
        return Fraction(_bareiss(rows, lambda a, b: a // b, 0, 1), scale)
    if isinstance(field, FunctionField):
        ring = field.ring
        scale = ring.one
        rows = []
        for r in m.rows:
            d = reduce(lambda a, b: a.lcm(b), (x.denom for x in r), ring.one)
            scale = scale * d
            rows.append([x.numer * d.exquo(x.denom) for x in r])
        det = _bareiss(rows, lambda a, b: a.exquo(b), ring.zero, ring.one)
        return field.from_polynomials(det, scale)
    rows = [list(r) for r in m.rows]
    return _bareiss(rows, lambda a, b: a / b, field.zero, field.one)


class Span:
    """Incrementally grown subspace of ``field^dim`` kept in echelon form."""

    def __init__(self, dim: int, field: Field):
        self.dim = dim
        self.field = field
        self._rows: list[tuple[int, list]] = []

    def __len__(self):
        return len(self._rows)

    def reduce(self, v: Sequence) -> list:
        v = list(v)
        for p, row in self._rows:
            f = v[p]
            if f != 0:
                v = [x - f * y if y != 0 else x for x, y in zip(v, row)]
        return v

    def contains(self, v: Sequence) -> bool:
        return all(x == 0 for x in self.reduce(v))

    def add(self, v: Sequence) -> bool:
        """Add ``v``; return True when it enlarged the span."""
        r = self.reduce(v)
        p = next((i for i, x in enumerate(r) if x != 0), None)
        if p is None:
            return False
        inv = self.field.one / r[p]
        self._rows.append((p, [x * inv if x != 0 else x for x in r]))
        return True


def independent_subset(vectors: Sequence[Sequence], field: Field) -> list[int]:
    """Indices of a maximal independent subset, scanning in order."""
    if not vectors:
        return []
    span = Span(len(vectors[0]), field)
    return [i for i, v in enumerate(vectors) if span.add(v)]
