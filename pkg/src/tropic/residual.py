"""Distance from a vector to the linear span of a matrix's columns.

The closed form works on a matrix that is *consistent* with the right-hand
side ``d``: every column either lives entirely inside the zero rows of ``d``
or avoids them.  :func:`consistify` produces that form, :func:`residual_delta`
evaluates ``sqrt((A (d^- A)^-)^- d)`` on it, and :func:`distance_to_span`
wraps both and also returns the minimizer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, InconsistentInput, SemifieldMismatch, ZeroColumn, ZeroVectorD
from .linalg import Matrix, Vector, conjugate, mat_vec, row_mat, row_vec, scalar_mul, zeros
from .metric import INFINITE, Distance
from .semifield import ZERO


@dataclass(frozen=True)
class ConsistencyResult:
    a_hat: Matrix
    zero_rows: frozenset  # rows i with d_i = 0
    forced_zero_columns: frozenset  # columns touching a zero row of d


@dataclass(frozen=True)
class SpanDistanceResult:
    delta: Distance
    minimizer: Vector | None
    nearest_point: Vector | None


def _check_shapes(A: Matrix, d: Vector):
    if A.sf != d.sf:
        raise SemifieldMismatch(f"operands live in {A.sf} and {d.sf}")
    if len(A.rows) != len(d):
        raise DimensionMismatch(f"matrix has {len(A.rows)} rows, vector has {len(d)} components")


def consistify(A: Matrix, d: Vector) -> ConsistencyResult:
    """Zero out, outside the zero rows of ``d``, every column that meets them.

    >>> from tropic import MAX_PLUS_Q, matrix, vector
    >>> r = consistify(matrix(MAX_PLUS_Q, [[2, None], [1, 3]]), vector(MAX_PLUS_Q, [None, 5]))
    >>> str(r.a_hat), sorted(r.zero_rows), sorted(r.forced_zero_columns)
    ('[2 -inf; -inf 3]', [0], [0])
    """
    _check_shapes(A, d)
    if d.is_zero():
        raise ZeroVectorD("consistency is defined for a nonzero right-hand side")
    zero_rows = frozenset(i for i, v in enumerate(d.entries) if v is ZERO)
    forced = frozenset(j for i in zero_rows for j, a in enumerate(A.rows[i]) if a is not ZERO)
    if not forced:
        return ConsistencyResult(A, zero_rows, forced)
    rows = tuple(
        r if i in zero_rows else tuple(ZERO if j in forced else a for j, a in enumerate(r))
        for i, r in enumerate(A.rows)
    )
    return ConsistencyResult(Matrix(A.sf, rows, A.ncols), zero_rows, forced)


def check_consistent(A: Matrix, d: Vector) -> frozenset:
    """Validate the residual preconditions and return the zero rows of ``d``."""
    _check_shapes(A, d)
    if d.is_zero():
        raise ZeroVectorD("the residual is defined for a nonzero right-hand side")
    zero_rows = frozenset(i for i, v in enumerate(d.entries) if v is ZERO)
    for j in range(A.ncols):
        col = [i for i, r in enumerate(A.rows) if r[j] is not ZERO]
        if not col:
            raise ZeroColumn(f"column {j} is zero; remove zero columns first")
        inside = sum(i in zero_rows for i in col)
        if 0 < inside < len(col):
            raise InconsistentInput(
                f"column {j} meets both zero and nonzero rows of d; apply consistify first")
    return zero_rows


def _principal(A: Matrix, d: Vector) -> Vector:
    """``(d^- A)^-`` as a column vector; zero where ``d^- A`` is zero."""
    return conjugate(row_mat(conjugate(d), A))


def residual_delta(A: Matrix, d: Vector) -> Distance:
    """The residual ``sqrt((A (d^- A)^-)^- d)`` of a consistent pair.

    Infinite when some row outside the zero rows of ``d`` is zero, i.e. when
    the instance reduced to the support of ``d`` is irregular.
    """
    zero_rows = check_consistent(A, d)
    sf = A.sf
    for i, r in enumerate(A.rows):
        if i not in zero_rows and all(a is ZERO for a in r):
            return INFINITE
    y = mat_vec(A, _principal(A, d))
    delta = sf.sqrt(row_vec(conjugate(y), d))
    return Distance(delta, sf)


def residual_delta_reduced(A: Matrix, d: Vector) -> Distance:
    """Residual computed on the reduced instance (zero rows of ``d`` and the
    columns meeting them deleted), as an independent route for consistent input."""
    zero_rows = check_consistent(A, d)
    keep_rows = [i for i in range(len(d)) if i not in zero_rows]
    forced = {j for i in zero_rows for j, a in enumerate(A.rows[i]) if a is not ZERO}
    keep_cols = [j for j in range(A.ncols) if j not in forced]
    sub = A.take_rows(keep_rows).take_columns(keep_cols)
    d_sub = Vector(d.sf, tuple(d.entries[i] for i in keep_rows))
    if not keep_cols or any(all(a is ZERO for a in r) for r in sub.rows):
        return INFINITE
    return residual_delta(sub, d_sub)


def distance_to_span(A: Matrix, d: Vector) -> SpanDistanceResult:
    """Minimum of ``rho(A x, d)`` over all ``x`` together with a minimizer.

    Zero columns are ignored (their minimizer component is zero), a zero
    ``d`` is at unit distance from the span, and a zero matrix is at infinite
    distance from any nonzero ``d``.
    """
    _check_shapes(A, d)
    sf = A.sf
    n = A.ncols
    if d.is_zero():
        return SpanDistanceResult(Distance(sf.one, sf), zeros(sf, n) if n else None, zeros(sf, len(d)))
    zero_cols = set(A.zero_columns())
    keep = [j for j in range(n) if j not in zero_cols]
    if not keep:
        return SpanDistanceResult(INFINITE, None, None)
    sub = A.take_columns(keep)
    a_hat = consistify(sub, d).a_hat
    delta = residual_delta(a_hat, d)
    if delta.is_infinite:
        return SpanDistanceResult(INFINITE, None, None)
    x_sub = scalar_mul(delta.value, _principal(a_hat, d))
    x = [ZERO] * n
    for j, v in zip(keep, x_sub.entries):
        x[j] = v
    x = Vector(sf, tuple(x))
    return SpanDistanceResult(delta, x, mat_vec(A, x))


def principal_solution(A: Matrix, d: Vector) -> Vector:
    """``(d^- A_hat)^-`` mapped back onto all columns of ``A`` (zero columns get zero)."""
    _check_shapes(A, d)
    sf = A.sf
    if d.is_zero():
        return zeros(sf, A.ncols)
    zero_cols = set(A.zero_columns())
    keep = [j for j in range(A.ncols) if j not in zero_cols]
    x = [ZERO] * A.ncols
    if keep:
        sub = A.take_columns(keep)
        a_hat = consistify(sub, d).a_hat
        s = row_mat(conjugate(d), a_hat)
        if not s.is_zero():
            for j, v in zip(keep, conjugate(s).entries):
                x[j] = v
    return Vector(sf, tuple(x))

