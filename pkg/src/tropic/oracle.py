"""Brute-force reference computations for checking the closed forms.

None of these routines use the residual formula to reach their verdicts:

* :func:`grid_min_distance` sweeps ``rho(A x, d)`` over a full grid with
  numpy.  Exact-kind inputs are scaled to integers first, so the sweep is
  exact.  The closed-form minimizer is evaluated as one extra point.
* :func:`generates` uses the classical greatest subsolution
  ``x_j = min_i d_i / a_ij``, where a zero ``d_i`` forces ``x_j`` to zero.
* :func:`enumerate_minimal_generators` tests every subset of columns with it.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Any

import numpy as np

from .errors import GridTooLarge, NotMaxPlus
from .linalg import Matrix, Vector, from_columns, mat_vec, vec_eq
from .metric import INFINITE, Distance, rho
from .residual import distance_to_span
from .semifield import MAX_PLUS_Q, ZERO, MaxPlus

DEFAULT_MAX_POINTS = 2 * 10**7
MAX_ENUMERATION_COLS = 12


@dataclass(frozen=True)
class GridSpec:
    """Grid ``lo, lo + step, ..., <= hi`` in every coordinate, plus zero if
    ``include_zero``."""

    lo: Any = Fraction(-15)
    hi: Any = Fraction(15)
    step: Any = Fraction(1, 2)
    include_zero: bool = True

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("grid needs lo < hi")
        if not self.step > 0:
            raise ValueError("grid step must be positive")

    def levels(self) -> list:
        count = int((self.hi - self.lo) // self.step) + 1
        return [self.lo + k * self.step for k in range(count)]

    def points(self, dims: int) -> int:
        return (len(self.levels()) + self.include_zero) ** dims


@dataclass(frozen=True)
class GridResult:
    distance: Distance
    point: Vector | None
    grid_distance: Distance
    grid_point: Vector | None
    candidate_distance: Distance

    def __iter__(self):
        return iter((self.distance, self.point))


def _scale(values) -> int:
    """Least common denominator of some rationals."""
    scale = 1
    for v in values:
        scale = math.lcm(scale, Fraction(v).denominator)
    return scale


def grid_min_distance(A: Matrix, d: Vector, grid: GridSpec | None = None,
                      max_points: int = DEFAULT_MAX_POINTS) -> GridResult:
    """Minimize ``rho(A x, d)`` by exhaustive sweep over a grid.

    Returns the best of the sweep and of the closed-form minimizer; the two
    ingredients are also reported separately.
    """
    sf = A.sf
    if not isinstance(sf, MaxPlus):
        raise NotMaxPlus("the grid oracle works in max-plus only")
    grid = grid or GridSpec()
    m, n = A.shape
    if n == 0:
        raise ValueError("grid search needs at least one column")
    total = grid.points(n)
    if total > max_points:
        raise GridTooLarge(f"{total} grid points exceed the cap of {max_points}")

    levels = grid.levels()
    finite_a = [a for r in A.rows for a in r if a is not ZERO]
    finite_d = [v for v in d.entries if v is not ZERO]
    if sf.exact:
        scale = _scale(finite_a + finite_d + levels)
        conv = lambda v: int(Fraction(v) * scale)  # noqa: E731
    else:
        scale = 1
        conv = float
    ia = [[None if a is ZERO else conv(a) for a in r] for r in A.rows]
    idv = [None if v is ZERO else conv(v) for v in d.entries]
    ilv = [conv(v) for v in levels]

    big = 1 + max([abs(v) for v in [x for r in ia for x in r if x is not None] + ilv
                   + [v for v in idv if v is not None]] or [1])
    # A zero grid level is the sentinel ``neg``: any sum involving it stays
    # below -4*big, while |finite y - d| never exceeds 3*big.  Terms at or
    # above 4*big therefore mean "infinite".
    neg = -8 * big
    inf_term = 4 * big
    if sf.exact:
        dtype = np.int16 if 10 * big < np.iinfo(np.int16).max else np.int64
    else:
        dtype = np.float64
    axis_vals = np.array(([neg] if grid.include_zero else []) + ilv, dtype=dtype)
    shape = (len(axis_vals),) * n

    def axis(j):
        s = [1] * n
        s[j] = len(axis_vals)
        return axis_vals.reshape(s)

    def row_max(i, shift):
        y = None
        for j in range(n):
            if ia[i][j] is not None:
                t = axis(j) + dtype(ia[i][j] - shift)
                y = t if y is None else np.maximum(y, t)
        return y

    worst = np.zeros((1,) * n, dtype=dtype)
    for i in range(m):
        if idv[i] is None:
            y = row_max(i, 0)
            if y is not None:
                term = np.where(y > -inf_term, dtype(inf_term), dtype(0))
                worst = np.maximum(worst, term)
            continue
        y = row_max(i, idv[i])
        if y is None:
            worst = np.full((1,) * n, inf_term, dtype=dtype)
            break
        np.abs(y, out=y)
        if y.shape == shape:
            worst = np.maximum(worst, y, out=y)
        else:
            worst = np.maximum(worst, y)
    worst = np.broadcast_to(worst, shape)
    flat = int(np.argmin(worst))
    best = worst.reshape(-1)[flat]

    idx = np.unravel_index(flat, shape)
    offset = 1 if grid.include_zero else 0
    coords = [ZERO if (grid.include_zero and k == 0) else levels[k - offset] for k in idx]
    grid_point = Vector(sf, tuple(sf.scalar(c) if c is not ZERO else ZERO for c in coords))
    if best >= inf_term:
        grid_distance = INFINITE
    else:
        value = Fraction(int(best), scale) if sf.exact else float(best)
        grid_distance = Distance(sf.scalar(value), sf)

    span = distance_to_span(A, d)
    if span.minimizer is not None:
        candidate = span.minimizer
        candidate_distance = rho(mat_vec(A, candidate), d)
    else:
        candidate, candidate_distance = None, INFINITE

    if candidate is not None and candidate_distance < grid_distance:
        return GridResult(candidate_distance, candidate, grid_distance, grid_point, candidate_distance)
    return GridResult(grid_distance, grid_point, grid_distance, grid_point, candidate_distance)


def greatest_subsolution(A: Matrix, d: Vector) -> Vector:
    """Largest ``x`` with ``A x <= d`` (zero columns get zero)."""
    sf = A.sf
    out = []
    for j in range(A.ncols):
        xj = None
        for i, r in enumerate(A.rows):
            a = r[j]
            if a is ZERO:
                continue
            ratio = ZERO if d[i] is ZERO else sf.div(d[i], a)
            xj = ratio if xj is None else sf.meet(xj, ratio)
        out.append(ZERO if xj is None else xj)
    return Vector(sf, tuple(out))


def generates(A: Matrix, d: Vector) -> bool:
    """Whether ``A x = d`` has a solution, via the greatest subsolution."""
    if A.ncols == 0:
        return d.is_zero()
    return vec_eq(mat_vec(A, greatest_subsolution(A, d)), d)


def enumerate_minimal_generators(A: Matrix, d: Vector) -> list:
    """All inclusion-minimal column sets whose span contains ``d`` (0-based),
    ordered by size then lexicographically."""
    n = A.ncols
    if n > MAX_ENUMERATION_COLS:
        raise ValueError(f"exhaustive enumeration is limited to {MAX_ENUMERATION_COLS} columns")
    gen = []
    for size in range(0, n + 1):
        for subset in combinations(range(n), size):
            if generates(A.take_columns(subset), d):
                gen.append(frozenset(subset))
    minimal = [s for s in gen if not any(t < s for t in gen)]
    return sorted(minimal, key=lambda s: (len(s), tuple(sorted(s))))


def is_independent_by_definition(A: Matrix) -> bool:
    """No column lies in the span of the others (a single column is independent)."""
    n = A.ncols
    if n == 1:
        return True
    return not any(generates(A.delete_column(i), A.column(i)) for i in range(n))


def random_scalar(rng: random.Random, density: float, value_range=(-5, 5), denominator: int = 2):
    if rng.random() >= density:
        return ZERO
    lo, hi = value_range
    return Fraction(rng.randint(int(lo * denominator), int(hi * denominator)), denominator)


def random_instance(seed, m: int, n: int, density: float = 1.0, value_range=(-5, 5),
                    denominator: int = 2, sf=MAX_PLUS_Q) -> tuple:
    """Deterministic random ``(A, d)`` with nonzero columns and nonzero ``d``.

    Entries are zero with probability ``1 - density`` and otherwise uniform
    multiples of ``1/denominator`` in ``value_range``; zero columns and a zero
    ``d`` are redrawn.
    """
    if not 0 < density <= 1:
        raise ValueError("density must lie in (0, 1]; zero columns are not allowed")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)

    def draw(length):
        while True:
            v = [random_scalar(rng, density, value_range, denominator) for _ in range(length)]
            if any(x is not ZERO for x in v):
                return v

    cols = [draw(m) for _ in range(n)]
    A = from_columns(sf, cols)
    d = Vector(sf, tuple(sf.scalar(x) for x in draw(m)))
    return A, d
