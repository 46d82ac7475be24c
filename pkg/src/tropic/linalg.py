"""Dense vectors and matrices over a semifield.

Column vectors (:class:`Vector`) and row vectors (:class:`RowVector`) are
distinct types: ``RowVector @ Matrix`` and ``RowVector @ Vector`` are defined,
a product of two column vectors is not.  Indices are 0-based in this API.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from .errors import ConjugateOfZeroVector, DimensionMismatch, SemifieldMismatch
from .semifield import ZERO, Semifield


def _same_sf(a, b):
    if a.sf != b.sf:
        raise SemifieldMismatch(f"operands live in {a.sf} and {b.sf}")


@dataclass(frozen=True)
class _Line:
    sf: Semifield
    entries: tuple

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def support(self) -> frozenset:
        return support(self)

    def is_zero(self) -> bool:
        return all(x is ZERO for x in self.entries)

    def __str__(self):
        return "[" + " ".join(self.sf.format(x) for x in self.entries) + "]"


@dataclass(frozen=True)
class Vector(_Line):
    """A column vector."""

    def __add__(self, other):
        return vec_add(self, other)

    def __repr__(self):
        return f"Vector({self})"


@dataclass(frozen=True)
class RowVector(_Line):
    """A row vector, the result of conjugating a column vector."""

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            return row_mat(self, other)
        if isinstance(other, Vector):
            return row_vec(self, other)
        return NotImplemented

    def __repr__(self):
        return f"RowVector({self})"


@dataclass(frozen=True)
class Matrix:
    """An ``m x n`` matrix stored row-major; ``n`` may be 0 for column subsets."""

    sf: Semifield
    rows: tuple
    ncols: int

    @property
    def shape(self):
        return len(self.rows), self.ncols

    def row(self, i) -> RowVector:
        return RowVector(self.sf, self.rows[i])

    def column(self, j) -> Vector:
        return Vector(self.sf, tuple(r[j] for r in self.rows))

    def columns(self) -> list:
        return [self.column(j) for j in range(self.ncols)]

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def take_columns(self, idx: Iterable[int]) -> Matrix:
        idx = list(idx)
        return Matrix(self.sf, tuple(tuple(r[j] for j in idx) for r in self.rows), len(idx))

    def delete_column(self, j: int) -> Matrix:
        return self.take_columns(k for k in range(self.ncols) if k != j)

    def take_rows(self, idx: Iterable[int]) -> Matrix:
        return Matrix(self.sf, tuple(self.rows[i] for i in idx), self.ncols)

    def zero_columns(self) -> list:
        return [j for j in range(self.ncols) if all(r[j] is ZERO for r in self.rows)]

    def is_zero(self) -> bool:
        return all(x is ZERO for r in self.rows for x in r)

    def __matmul__(self, other):
        if isinstance(other, Vector):
            return mat_vec(self, other)
        return NotImplemented

    def __str__(self):
        fmt = self.sf.format
        return "[" + "; ".join(" ".join(fmt(x) for x in r) for r in self.rows) + "]"

    def __repr__(self):
        return f"Matrix({self})"


# -- constructors ------------------------------------------------------------

def vector(sf: Semifield, values: Iterable[Any]) -> Vector:
    entries = tuple(sf.scalar(v) for v in values)
    if not entries:
        raise DimensionMismatch("vectors need at least one component")
    return Vector(sf, entries)


def row_vector(sf: Semifield, values: Iterable[Any]) -> RowVector:
    return RowVector(sf, tuple(sf.scalar(v) for v in values))


def matrix(sf: Semifield, rows: Sequence[Sequence[Any]]) -> Matrix:
    rows = [tuple(sf.scalar(v) for v in r) for r in rows]
    if not rows:
        raise DimensionMismatch("matrices need at least one row")
    n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise DimensionMismatch("ragged matrix rows")
    return Matrix(sf, tuple(rows), n)


def from_columns(sf: Semifield, columns: Sequence[Sequence[Any]], m: int | None = None) -> Matrix:
    cols = [tuple(sf.scalar(v) for v in c) for c in columns]
    if not cols:
        if m is None:
            raise DimensionMismatch("row count needed for an empty column list")
        return Matrix(sf, tuple(() for _ in range(m)), 0)
    m = len(cols[0])
    if any(len(c) != m for c in cols):
        raise DimensionMismatch("columns of unequal length")
    return Matrix(sf, tuple(tuple(c[i] for c in cols) for i in range(m)), len(cols))


def zeros(sf: Semifield, m: int) -> Vector:
    return Vector(sf, (ZERO,) * m)


def identity(sf: Semifield, m: int) -> Matrix:
    return Matrix(sf, tuple(tuple(sf.one if i == j else ZERO for j in range(m))
                            for i in range(m)), m)


# -- operations ----------------------------------------------------------------

def vec_add(a: Vector, b: Vector) -> Vector:
    _same_sf(a, b)
    if len(a) != len(b):
        raise DimensionMismatch(f"lengths {len(a)} and {len(b)}")
    add = a.sf.add
    return Vector(a.sf, tuple(add(x, y) for x, y in zip(a.entries, b.entries)))


def scalar_mul(x, a):
    """Multiply every component of a (row or column) vector by ``x``."""
    mul = a.sf.mul
    return type(a)(a.sf, tuple(mul(x, y) for y in a.entries))


def mat_vec(A: Matrix, x: Vector) -> Vector:
    _same_sf(A, x)
    if A.ncols != len(x):
        raise DimensionMismatch(f"matrix has {A.ncols} columns, vector has {len(x)} components")
    sf = A.sf
    add, mul = sf.add, sf.mul
    out = []
    for r in A.rows:
        acc = ZERO
        for a, y in zip(r, x.entries):
            acc = add(acc, mul(a, y))
        out.append(acc)
    return Vector(sf, tuple(out))


def row_mat(r: RowVector, A: Matrix) -> RowVector:
    _same_sf(r, A)
    if len(r) != len(A.rows):
        raise DimensionMismatch(f"row vector has {len(r)} components, matrix has {len(A.rows)} rows")
    sf = A.sf
    add, mul = sf.add, sf.mul
    out = [ZERO] * A.ncols
    for ri, arow in zip(r.entries, A.rows):
        if ri is ZERO:
            continue
        for j, a in enumerate(arow):
            out[j] = add(out[j], mul(ri, a))
    return RowVector(sf, tuple(out))


def row_vec(r: RowVector, x: Vector):
    """Inner product of a row vector and a column vector (a scalar)."""
    _same_sf(r, x)
    if len(r) != len(x):
        raise DimensionMismatch(f"lengths {len(r)} and {len(x)}")
    sf = r.sf
    return sf.sum(sf.mul(a, b) for a, b in zip(r.entries, x.entries))


def vec_row(x: Vector, r: RowVector) -> Matrix:
    """Outer product ``x r`` (an ``m x n`` matrix)."""
    _same_sf(x, r)
    mul = x.sf.mul
    return Matrix(x.sf, tuple(tuple(mul(a, b) for b in r.entries) for a in x.entries), len(r))


def conjugate(x):
    """Componentwise pseudo-inverse, swapping column and row orientation.

    Nonzero components are inverted and zero components stay zero.  The
    conjugate of the zero vector is undefined.
    """
    if x.is_zero():
        raise ConjugateOfZeroVector("conjugate of the zero vector is undefined")
    sf = x.sf
    entries = tuple(ZERO if v is ZERO else sf.inv(v) for v in x.entries)
    if isinstance(x, Vector):
        return RowVector(sf, entries)
    return Vector(sf, entries)


def support(x) -> frozenset:
    return frozenset(i for i, v in enumerate(x.entries) if v is not ZERO)


def is_regular_vector(x) -> bool:
    return all(v is not ZERO for v in x.entries)


def is_regular_matrix(A: Matrix) -> bool:
    return all(any(v is not ZERO for v in r) for r in A.rows)


def vec_leq(a, b) -> bool:
    """Componentwise order ``a <= b``."""
    _same_sf(a, b)
    if len(a) != len(b):
        raise DimensionMismatch(f"lengths {len(a)} and {len(b)}")
    leq = a.sf.leq
    return all(leq(x, y) for x, y in zip(a.entries, b.entries))


def vec_eq(a, b) -> bool:
    """Componentwise equality under the semifield's equality policy."""
    _same_sf(a, b)
    if len(a) != len(b):
        raise DimensionMismatch(f"lengths {len(a)} and {len(b)}")
    eq = a.sf.eq
    return all(eq(x, y) for x, y in zip(a.entries, b.entries))


def mat_leq(A: Matrix, B: Matrix) -> bool:
    _same_sf(A, B)
    if A.shape != B.shape:
        raise DimensionMismatch(f"shapes {A.shape} and {B.shape}")
    leq = A.sf.leq
    return all(leq(x, y) for ra, rb in zip(A.rows, B.rows) for x, y in zip(ra, rb))
