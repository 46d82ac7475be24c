"""Linearly ordered radicable idempotent semifields.

A semifield object bundles the carrier arithmetic; scalars themselves are
plain Python numbers (``float`` or ``Fraction``) plus the shared bottom
element :data:`ZERO`.  Arithmetic touching :data:`ZERO` is dispatched by
identity before any numeric operation, so no ``-inf`` ever enters a
computation.

Four instances are provided::

    >>> q = MAX_PLUS_Q
    >>> q.add(q.scalar("3"), q.scalar("1/2")), q.mul(q.scalar("3"), q.scalar("1/2"))
    (Fraction(3, 1), Fraction(7, 2))
    >>> MIN_PLUS.add(3.0, 5.0)
    3.0
"""

from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational

from .errors import InversionOfZero, UnknownSemifield, ZeroToNonpositivePower

DEFAULT_TOLERANCE = 1e-9
TOLERANCE_ENV = "TROPIC_TOLERANCE"


class _Zero:
    """The bottom element shared by every semifield."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO"

    def __reduce__(self):
        return (_Zero, ())


ZERO = _Zero()


class Kind(str, enum.Enum):
    MAX_PLUS_FLOAT = "max-plus-float"
    MAX_PLUS_RATIONAL = "max-plus-rational"
    MIN_PLUS_FLOAT = "min-plus-float"
    MAX_TIMES_FLOAT = "max-times-float"


_ALIASES = {
    "max-plus": Kind.MAX_PLUS_FLOAT,
    "maxplus": Kind.MAX_PLUS_FLOAT,
    "maxplus-float": Kind.MAX_PLUS_FLOAT,
    "maxplus-rational": Kind.MAX_PLUS_RATIONAL,
    "max-plus-q": Kind.MAX_PLUS_RATIONAL,
    "min-plus": Kind.MIN_PLUS_FLOAT,
    "minplus": Kind.MIN_PLUS_FLOAT,
    "minplus-float": Kind.MIN_PLUS_FLOAT,
    "max-times": Kind.MAX_TIMES_FLOAT,
    "maxtimes": Kind.MAX_TIMES_FLOAT,
    "maxtimes-float": Kind.MAX_TIMES_FLOAT,
}


def _as_fraction(q) -> Fraction:
    if isinstance(q, Fraction):
        return q
    if isinstance(q, float):
        return Fraction(q).limit_denominator(10**12)
    return Fraction(q)


@dataclass(frozen=True)
class Semifield:
    """Carrier arithmetic plus the order-compatible equality policy.

    Subclasses implement the ``_plus``/``_times``/``_inv``/``_pow``/``_le``
    primitives on invertible elements only.  ``tol`` is the relative-or-
    absolute slack used by :meth:`eq` and :meth:`leq`; it is zero for exact
    kinds.
    """

    tol: float = DEFAULT_TOLERANCE
    kind = None
    exact = False
    zero_token = "-inf"
    zero = ZERO
    one = None

    # -- primitives on invertible elements -------------------------------
    def _plus(self, x, y):
        raise NotImplementedError

    def _times(self, x, y):
        raise NotImplementedError

    def _inv(self, x):
        raise NotImplementedError

    def _pow(self, x, q: Fraction):
        raise NotImplementedError

    def _le(self, x, y) -> bool:
        raise NotImplementedError

    def _coerce(self, value):
        raise NotImplementedError

    # -- public scalar algebra ---------------------------------------------
    def scalar(self, value):
        """Convert ``value`` (number, token string, ``None`` or ZERO) to a scalar."""
        if value is ZERO or value is None:
            return ZERO
        if isinstance(value, str):
            return self.parse(value)
        return self._coerce(value)

    def is_zero(self, x) -> bool:
        return x is ZERO

    def add(self, x, y):
        if x is ZERO:
            return y
        if y is ZERO:
            return x
        return self._plus(x, y)

    def mul(self, x, y):
        if x is ZERO or y is ZERO:
            return ZERO
        return self._times(x, y)

    def inv(self, x):
        if x is ZERO:
            raise InversionOfZero("the zero element has no inverse")
        return self._inv(x)

    def div(self, x, y):
        """Return ``inv(y) * x``."""
        return self.mul(x, self.inv(y))

    def pow(self, x, q):
        q = _as_fraction(q)
        if x is ZERO:
            if q > 0:
                return ZERO
            raise ZeroToNonpositivePower(f"zero raised to power {q}")
        if q == 0:
            return self.one
        return self._pow(x, q)

    def sqrt(self, x):
        return self.pow(x, Fraction(1, 2))

    def sum(self, xs):
        total = ZERO
        for x in xs:
            total = self.add(total, x)
        return total

    def close(self, x, y) -> bool:
        if self.exact:
            return x == y
        return abs(x - y) <= self.tol * max(1.0, abs(x), abs(y))

    def eq(self, x, y) -> bool:
        if x is ZERO or y is ZERO:
            return x is y
        return self.close(x, y)

    def leq(self, x, y) -> bool:
        if x is ZERO:
            return True
        if y is ZERO:
            return False
        return self._le(x, y) or self.close(x, y)

    def lt(self, x, y) -> bool:
        return self.leq(x, y) and not self.eq(x, y)

    def meet(self, x, y):
        """Greatest lower bound in the (total) semifield order."""
        if x is ZERO or y is ZERO:
            return ZERO
        return x if self._le(x, y) else y

    def is_one(self, x) -> bool:
        return x is not ZERO and self.close(x, self.one)

    # -- tokens --------------------------------------------------------------
    def parse(self, token: str):
        token = token.strip()
        if token == self.zero_token:
            return ZERO
        try:
            if "/" in token:
                value = Fraction(token)
            elif self.exact:
                value = Fraction(token)
            else:
                value = float(token)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad scalar token {token!r}") from exc
        if not self.exact and isinstance(value, Fraction):
            value = float(value)
        if isinstance(value, float) and not math.isfinite(value):
            raise ValueError(f"bad scalar token {token!r}")
        return self._coerce(value)

    def format(self, x) -> str:
        if x is ZERO:
            return self.zero_token
        if isinstance(x, Fraction):
            return str(x)
        return repr(float(x))

    def __str__(self):
        return self.kind.value


class MaxPlus(Semifield):
    """The max-plus semifield over floats: ``⊕ = max``, ``⊗ = +``."""

    kind = Kind.MAX_PLUS_FLOAT
    one = 0.0

    def _plus(self, x, y):
        return x if x >= y else y

    def _times(self, x, y):
        return x + y

    def _inv(self, x):
        return -x

    def _pow(self, x, q):
        return x * float(q)

    def _le(self, x, y):
        return x <= y

    def _coerce(self, value):
        value = float(value)
        if not math.isfinite(value):
            raise ValueError(f"{value} is not a finite max-plus element")
        return value


@dataclass(frozen=True)
class MaxPlusRational(MaxPlus):
    """Exact max-plus arithmetic over ``Fraction``."""

    tol: float = field(default=0.0)
    kind = Kind.MAX_PLUS_RATIONAL
    exact = True
    one = Fraction(0)

    def __post_init__(self):
        if self.tol != 0:
            raise ValueError("the rational semifield is exact; tolerance must be 0")

    def _pow(self, x, q):
        return x * q

    def _coerce(self, value):
        if isinstance(value, float):
            if not math.isfinite(value):
                raise ValueError(f"{value} is not a finite max-plus element")
            return Fraction(value)
        if isinstance(value, Rational):
            return Fraction(value)
        raise TypeError(f"cannot use {value!r} as an exact scalar")


class MinPlus(Semifield):
    """Min-plus over floats.  The semifield order is the reverse numeric order."""

    kind = Kind.MIN_PLUS_FLOAT
    zero_token = "+inf"
    one = 0.0

    def _plus(self, x, y):
        return x if x <= y else y

    def _times(self, x, y):
        return x + y

    def _inv(self, x):
        return -x

    def _pow(self, x, q):
        return x * float(q)

    def _le(self, x, y):
        return x >= y

    def _coerce(self, value):
        value = float(value)
        if not math.isfinite(value):
            raise ValueError(f"{value} is not a finite min-plus element")
        return value


class MaxTimes(Semifield):
    """Max-times over the positive reals; the bottom element is written ``0``."""

    kind = Kind.MAX_TIMES_FLOAT
    zero_token = "0"
    one = 1.0

    def _plus(self, x, y):
        return x if x >= y else y

    def _times(self, x, y):
        return x * y

    def _inv(self, x):
        return 1.0 / x

    def _pow(self, x, q):
        return x ** float(q)

    def _le(self, x, y):
        return x <= y

    def _coerce(self, value):
        value = float(value)
        if value == 0.0:
            return ZERO
        if not (value > 0 and math.isfinite(value)):
            raise ValueError(f"{value} is not a max-times element")
        return value

    def parse(self, token):
        token = token.strip()
        if token in ("0", "0.0", "0/1"):
            return ZERO
        return super().parse(token)


def default_tolerance() -> float:
    raw = os.environ.get(TOLERANCE_ENV)
    if raw is None or raw == "":
        return DEFAULT_TOLERANCE
    value = float(raw)
    if value < 0 or not math.isfinite(value):
        raise ValueError(f"{TOLERANCE_ENV} must be a nonnegative real, got {raw!r}")
    return value


def get_semifield(kind, tol: float | None = None) -> Semifield:
    """Build a semifield from a kind name (aliases such as ``max-plus`` accepted).

    ``tol`` defaults to ``$TROPIC_TOLERANCE`` or 1e-9 for float kinds and is
    forced to 0 for the rational kind.
    """
    if isinstance(kind, str) and not isinstance(kind, Kind):
        key = kind.strip().lower()
        try:
            kind = Kind(key)
        except ValueError:
            if key not in _ALIASES:
                raise UnknownSemifield(f"unknown semifield {kind!r}") from None
            kind = _ALIASES[key]
    if kind is Kind.MAX_PLUS_RATIONAL:
        if tol:
            raise ValueError("the rational semifield is exact; tolerance must be 0")
        return MaxPlusRational()
    if tol is None:
        tol = default_tolerance()
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    cls = {Kind.MAX_PLUS_FLOAT: MaxPlus, Kind.MIN_PLUS_FLOAT: MinPlus,
           Kind.MAX_TIMES_FLOAT: MaxTimes}[kind]
    return cls(tol=tol)


MAX_PLUS = MaxPlus()
MAX_PLUS_Q = MaxPlusRational()
MIN_PLUS = MinPlus()
MAX_TIMES = MaxTimes()
