"""Linear dependence, the independence measure and sequential reduction."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, SemifieldMismatch, SingleColumn, ZeroColumn
from .linalg import Matrix, Vector
from .metric import Distance, min_distance
from .residual import distance_to_span


@dataclass(frozen=True)
class ReductionTrace:
    """Outcome of :func:`reduce_to_independent` (0-based column indices).

    ``step_residuals[i]`` is the residual of column ``i`` against the columns
    still retained when it was examined, or ``None`` if no other column was
    left to test against.
    """

    kept: tuple
    removed: tuple
    step_residuals: tuple


def _require_nonzero_columns(A: Matrix):
    zero = A.zero_columns()
    if zero:
        raise ZeroColumn(f"columns {zero} are zero")


def dependence_residual(d: Vector, A: Matrix) -> Distance:
    """Distance from ``d`` to the span of the columns of ``A``."""
    return distance_to_span(A, d).delta


def is_dependent(d: Vector, A: Matrix) -> bool:
    """True iff ``d`` is a linear combination of the columns of ``A``."""
    return dependence_residual(d, A).is_one()


def _residual_against_rest(A: Matrix, i: int, others) -> Distance | None:
    if not others:
        return None
    return dependence_residual(A.column(i), A.take_columns(others))


def delta_independence(A: Matrix) -> Distance:
    """Minimum over columns of the residual of a column against all the others."""
    if A.ncols < 2:
        raise SingleColumn("the independence measure needs at least two columns")
    _require_nonzero_columns(A)
    cols = range(A.ncols)
    return min_distance(
        _residual_against_rest(A, i, [j for j in cols if j != i]) for i in cols)


def is_independent(A: Matrix) -> bool:
    _require_nonzero_columns(A)
    if A.ncols == 1:
        return True
    return not delta_independence(A).is_one()


def reduce_to_independent(A: Matrix) -> ReductionTrace:
    """Drop, in column order, every column generated by the columns still kept.

    At step ``i`` the column is tested against all other columns that have
    not been removed so far, including those not visited yet.
    """
    _require_nonzero_columns(A)
    kept = list(range(A.ncols))
    removed = []
    residuals = []
    for i in range(A.ncols):
        others = [j for j in kept if j != i]
        delta = _residual_against_rest(A, i, others)
        residuals.append(delta)
        if delta is not None and delta.is_one():
            kept.remove(i)
            removed.append(i)
    return ReductionTrace(tuple(kept), tuple(removed), tuple(residuals))


def systems_equivalent(A: Matrix, B: Matrix) -> bool:
    """True iff every column of each matrix lies in the span of the other's."""
    if A.sf != B.sf:
        raise SemifieldMismatch(f"operands live in {A.sf} and {B.sf}")
    if len(A.rows) != len(B.rows):
        raise DimensionMismatch(f"row counts {len(A.rows)} and {len(B.rows)}")
    return (all(is_dependent(a, B) for a in A.columns())
            and all(is_dependent(b, A) for b in B.columns()))
