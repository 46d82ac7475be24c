"""The distance function between vectors and its Chebyshev specialization."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import total_ordering
from typing import Any, Iterable

from .errors import DimensionMismatch, IrregularInput, NotMaxPlus, SemifieldMismatch
from .linalg import Vector, is_regular_vector
from .semifield import ZERO, MaxPlus, Semifield


@total_ordering
@dataclass(frozen=True)
class Distance:
    """Either a finite semifield value or the symbolic infinity.

    ``value is None`` encodes infinity.  Infinity is above every finite
    distance; finite distances compare with the semifield order (and its
    tolerance), so ``sf`` is carried along but ignored by ``==``.
    """

    value: Any = None
    sf: Semifield | None = field(default=None, compare=False, repr=False)

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def is_one(self) -> bool:
        return self.value is not None and self.sf.is_one(self.value)

    def close_to(self, other: Distance) -> bool:
        if self.is_infinite or other.is_infinite:
            return self.is_infinite and other.is_infinite
        return self.sf.eq(self.value, other.value)

    def __lt__(self, other):
        if not isinstance(other, Distance):
            return NotImplemented
        if self.is_infinite:
            return False
        if other.is_infinite:
            return True
        return self.sf.lt(self.value, other.value)

    def format(self) -> str:
        return "inf" if self.is_infinite else self.sf.format(self.value)

    def __str__(self):
        return self.format()


INFINITE = Distance()


def finite(sf: Semifield, value) -> Distance:
    if value is ZERO:
        raise ValueError("a distance cannot be the zero element")
    return Distance(value, sf)


def min_distance(distances: Iterable[Distance]) -> Distance:
    best = INFINITE
    for d in distances:
        if d < best:
            best = d
    return best


def rho(a: Vector, b: Vector) -> Distance:
    """Distance between two vectors of equal length.

    Infinite when the supports differ; the unit when both are zero;
    otherwise the sum over the common support of ``b_i^-1 a_i + a_i^-1 b_i``.
    """
    if a.sf != b.sf:
        raise SemifieldMismatch(f"operands live in {a.sf} and {b.sf}")
    if len(a) != len(b):
        raise DimensionMismatch(f"lengths {len(a)} and {len(b)}")
    sf = a.sf
    acc = ZERO
    for x, y in zip(a.entries, b.entries):
        if x is ZERO or y is ZERO:
            if x is not y:
                return INFINITE
            continue
        acc = sf.add(acc, sf.add(sf.div(x, y), sf.div(y, x)))
    if acc is ZERO:
        return Distance(sf.one, sf)
    return Distance(acc, sf)


def chebyshev(a: Vector, b: Vector):
    """Ordinary ``max_i |b_i - a_i|`` for all-finite max-plus vectors."""
    if not isinstance(a.sf, MaxPlus) or a.sf != b.sf:
        raise NotMaxPlus("the Chebyshev metric applies to max-plus vectors only")
    if len(a) != len(b):
        raise DimensionMismatch(f"lengths {len(a)} and {len(b)}")
    if not (is_regular_vector(a) and is_regular_vector(b)):
        raise IrregularInput("the Chebyshev metric needs vectors with no zero components")
    return max(abs(y - x) for x, y in zip(a.entries, b.entries))

