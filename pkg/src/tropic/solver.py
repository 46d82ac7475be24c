"""Solution theory for ``A x = d``: existence, uniqueness and the general solution.

Every solution is bounded above by the principal solution ``(d^- A_hat)^-``.
The full solution set is a union of boxes, one per minimal generating
subsystem ``I`` of columns: components in ``I`` are pinned to the principal
value, the rest range between zero and it.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import DimensionMismatch, EnumerationCapExceeded, InfiniteResidual, SemifieldMismatch
from .linalg import Matrix, Vector, mat_vec, vec_eq, zeros
from .metric import INFINITE, Distance
from .residual import consistify, distance_to_span, principal_solution, residual_delta
from .semifield import ZERO

DEFAULT_MAX_COLS = 20


class _Unbounded:
    """Upper bound of a component that may take any value."""

    def __repr__(self):
        return "UNBOUNDED"


UNBOUNDED = _Unbounded()


class Verdict(str, enum.Enum):
    NONE = "none"
    UNIQUE = "unique"
    FAMILY = "family"


@dataclass(frozen=True)
class Preprocessed:
    """A nondegenerate instance extracted from ``A x = d``.

    ``columns`` maps positions in ``a_hat`` back to columns of the input;
    ``free_indices`` are the zero columns of the input.  ``trivial`` is set
    when the instance degenerates (zero ``A`` or zero ``d``) and the answer is
    known without further work; ``a_hat`` is then ``None``.
    """

    a_hat: Matrix | None
    d: Vector
    columns: tuple
    free_indices: frozenset
    forced_zero: frozenset = frozenset()
    trivial: Verdict | None = None


@dataclass(frozen=True)
class SolutionReport:
    verdict: Verdict
    residual: Distance
    principal: Vector | None
    pseudo: Vector | None
    free_indices: frozenset = frozenset()

    @property
    def solvable(self) -> bool:
        return self.verdict is not Verdict.NONE


@dataclass(frozen=True)
class BoxSolution:
    """One member ``x_I`` of the general solution (0-based indices).

    ``fixed`` pins the components in ``index_set``; ``upper_bounds`` gives
    the bound of every other component, :data:`UNBOUNDED` for free ones.  A
    bound equal to ZERO pins that component to zero.
    """

    index_set: frozenset
    fixed: dict = field(hash=False)
    upper_bounds: dict = field(hash=False)

    @property
    def size(self) -> int:
        return len(self.fixed) + len(self.upper_bounds)

    @property
    def has_slack(self) -> bool:
        return any(b is not ZERO for b in self.upper_bounds.values())

    def lower_corner(self, sf) -> Vector:
        return self._corner(sf, upper=False)

    def upper_corner(self, sf) -> Vector:
        """Largest point of the box; free components are set to zero."""
        return self._corner(sf, upper=True)

    def _corner(self, sf, upper):
        x = [ZERO] * self.size
        for i, v in self.fixed.items():
            x[i] = v
        if upper:
            for i, b in self.upper_bounds.items():
                if b is not UNBOUNDED:
                    x[i] = b
        return Vector(sf, tuple(x))

    def contains(self, x: Vector) -> bool:
        sf = x.sf
        if len(x) != self.size:
            raise DimensionMismatch(f"box has {self.size} components, vector has {len(x)}")
        for i, v in self.fixed.items():
            if not sf.eq(x[i], v):
                return False
        for i, b in self.upper_bounds.items():
            if b is not UNBOUNDED and not sf.leq(x[i], b):
                return False
        return True

    def sample(self, sf, rng: random.Random, zero_prob: float = 0.25, spread: int = 4) -> Vector:
        """Random point of the box.

        Each slack component is zero with probability ``zero_prob``, otherwise
        its bound divided by a random power of an element above one.
        """
        above_one = sf.scalar(2)
        if sf.lt(above_one, sf.one):
            above_one = sf.inv(above_one)
        x = [ZERO] * self.size
        for i, v in self.fixed.items():
            x[i] = v
        for i, b in self.upper_bounds.items():
            if b is ZERO or rng.random() < zero_prob:
                continue
            if b is UNBOUNDED:
                x[i] = sf.pow(above_one, Fraction(rng.randint(-2 * spread, 2 * spread), 2))
                continue
            x[i] = sf.div(b, sf.pow(above_one, Fraction(rng.randint(0, 2 * spread), 2)))
        return Vector(sf, tuple(x))


@dataclass(frozen=True)
class GeneralSolution:
    family: tuple
    complete: bool = True

    @property
    def index_sets(self) -> list:
        return [b.index_set for b in self.family]


def _check_shapes(A: Matrix, d: Vector):
    if A.sf != d.sf:
        raise SemifieldMismatch(f"operands live in {A.sf} and {d.sf}")
    if len(A.rows) != len(d):
        raise DimensionMismatch(f"matrix has {len(A.rows)} rows, vector has {len(d)} components")


def preprocess(A: Matrix, d: Vector) -> Preprocessed:
    """Strip zero columns, settle the degenerate cases, then consistify."""
    _check_shapes(A, d)
    n = A.ncols
    free = frozenset(A.zero_columns())
    keep = tuple(j for j in range(n) if j not in free)
    if not keep:
        verdict = Verdict.FAMILY if d.is_zero() else Verdict.NONE
        return Preprocessed(None, d, (), free, trivial=verdict)
    if d.is_zero():
        verdict = Verdict.UNIQUE if not free else Verdict.FAMILY
        return Preprocessed(None, d, keep, free, trivial=verdict)
    cr = consistify(A.take_columns(keep), d)
    forced = frozenset(keep[j] for j in cr.forced_zero_columns)
    return Preprocessed(cr.a_hat, d, keep, free, forced)


def _generates(a_hat: Matrix, d: Vector, positions) -> bool:
    """Whether ``d`` lies in the span of the given columns of a consistent matrix."""
    if not positions:
        return False
    sub = a_hat.take_columns(positions)
    return residual_delta(sub, d).is_one()


def solve(A: Matrix, d: Vector) -> SolutionReport:
    """Decide solvability of ``A x = d`` and return the principal and pseudo solutions.

    Zero columns of ``A`` are reported in ``free_indices`` (their component is
    set to zero in the returned vectors but may take any value).
    """
    pre = preprocess(A, d)
    sf = A.sf
    n = A.ncols
    one = Distance(sf.one, sf)
    if pre.trivial is Verdict.NONE:
        return SolutionReport(Verdict.NONE, INFINITE, None, None, pre.free_indices)
    if pre.trivial is not None:
        x = zeros(sf, n)
        return SolutionReport(pre.trivial, one, x, x, pre.free_indices)

    span = distance_to_span(A, d)
    if not span.delta.is_one():
        return SolutionReport(Verdict.NONE, span.delta, None, span.minimizer, pre.free_indices)

    principal = principal_solution(A, d)
    movable = [k for k, j in enumerate(pre.columns) if j not in pre.forced_zero]
    minimal = all(not _generates(pre.a_hat, d, [p for p in movable if p != k]) for k in movable)
    unique = minimal and not pre.free_indices
    verdict = Verdict.UNIQUE if unique else Verdict.FAMILY
    return SolutionReport(verdict, span.delta, principal, span.minimizer, pre.free_indices)


def pseudo_solve(A: Matrix, d: Vector) -> Vector:
    """The point ``Delta (d^- A)^-`` closest to ``d`` within the span."""
    span = distance_to_span(A, d)
    if span.delta.is_infinite:
        raise InfiniteResidual("d is at infinite distance from the span of A")
    return span.minimizer


def _shortlex(index_set) -> tuple:
    return (len(index_set), tuple(sorted(index_set)))


def general_solution(A: Matrix, d: Vector, max_cols: int = DEFAULT_MAX_COLS,
                     partial: bool = False) -> GeneralSolution:
    """All solutions of ``A x = d`` as a family of boxes, one per minimal
    generating subsystem of columns, ordered by size then lexicographically.

    Enumeration visits every subset of the candidate columns, so it is
    refused above ``max_cols`` candidate columns.  With ``partial=True`` the
    first ``2**max_cols`` subsets (smallest first) are examined instead and
    the result is flagged incomplete.
    """
    pre = preprocess(A, d)
    sf = A.sf
    n = A.ncols
    bounds_free = {i: UNBOUNDED for i in pre.free_indices}
    if pre.trivial is Verdict.NONE:
        return GeneralSolution(())
    if pre.trivial is not None:
        # d = 0: only x = 0 on the nonzero columns; zero columns are free
        bounds = {j: ZERO for j in pre.columns}
        bounds.update(bounds_free)
        return GeneralSolution((BoxSolution(frozenset(), {}, bounds),))

    principal = principal_solution(A, d)
    candidates = [k for k, j in enumerate(pre.columns) if j not in pre.forced_zero]
    budget = None
    if len(candidates) > max_cols:
        if not partial:
            raise EnumerationCapExceeded(
                f"{len(candidates)} candidate columns exceed the cap of {max_cols}")
        budget = 2 ** max_cols

    generating = {}
    found = []
    examined = 0
    complete = True
    for size in range(1, len(candidates) + 1):
        for subset in combinations(candidates, size):
            if budget is not None and examined >= budget:
                complete = False
                break
            examined += 1
            gen = _generates(pre.a_hat, d, list(subset))
            generating[subset] = gen
            if gen and all(not generating.get(subset[:k] + subset[k + 1:], False)
                           for k in range(size)):
                found.append(frozenset(pre.columns[p] for p in subset))
        if not complete:
            break

    family = []
    for index_set in sorted(found, key=_shortlex):
        fixed = {i: principal[i] for i in sorted(index_set)}
        bounds = {i: principal[i] for i in range(n) if i not in index_set and i not in pre.free_indices}
        bounds.update(bounds_free)
        family.append(BoxSolution(index_set, fixed, dict(sorted(bounds.items()))))
    return GeneralSolution(tuple(family), complete)


def verify(A: Matrix, d: Vector, x: Vector) -> bool:
    """Check ``A x = d`` (exactly, or within tolerance for float kinds)."""
    _check_shapes(A, d)
    if A.ncols != len(x):
        raise DimensionMismatch(f"matrix has {A.ncols} columns, vector has {len(x)} components")
    return vec_eq(mat_vec(A, x), d)
