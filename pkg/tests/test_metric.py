from fractions import Fraction

import pytest
from hypothesis import given

from tropic import INFINITE, MAX_PLUS_Q, MAX_TIMES, MIN_PLUS, ZERO, Distance, chebyshev, rho, vector
from tropic.errors import IrregularInput, NotMaxPlus
from tropic.metric import finite, min_distance

from strategies import vectors

Q = MAX_PLUS_Q


def v(*xs):
    return vector(Q, xs)


def test_rho_example():
    assert rho(v(0, 0), v(1, 3)) == Distance(Fraction(3), Q)


def test_chebyshev_example():
    assert chebyshev(v(2, 5), v(4, 1)) == 4


def test_rho_support_rules():
    assert rho(v(None, 1), v(2, 1)).is_infinite
    assert rho(v(None, None), v(None, None)).is_one()
    assert rho(v(None, 1), v(None, 3)) == Distance(Fraction(2), Q)


def test_rho_other_kinds():
    assert rho(vector(MAX_TIMES, [1.0, 4.0]), vector(MAX_TIMES, [2.0, 1.0])).value == 4.0
    assert rho(vector(MIN_PLUS, [0.0]), vector(MIN_PLUS, [2.0])).value == -2.0


def test_distance_order_and_format():
    one, half = Distance(Fraction(0), Q), Distance(Fraction(1, 2), Q)
    assert one < half < INFINITE
    assert not INFINITE < INFINITE
    assert min_distance([INFINITE, half, one]) == one
    assert min_distance([]) is INFINITE
    assert half.format() == "1/2" and INFINITE.format() == "inf"
    with pytest.raises(ValueError):
        finite(Q, ZERO)


def test_chebyshev_preconditions():
    with pytest.raises(IrregularInput):
        chebyshev(v(None, 1), v(1, 1))
    with pytest.raises(NotMaxPlus):
        chebyshev(vector(MAX_TIMES, [1.0]), vector(MAX_TIMES, [2.0]))


@given(vectors(m=3), vectors(m=3), vectors(m=3))
def test_metric_properties(a, b, c):
    assert rho(a, b) == rho(b, a)
    assert rho(a, a).is_one()
    d = rho(a, b)
    if d.is_finite:
        assert Q.leq(Q.one, d.value)
    # triangle inequality in multiplicative form
    if rho(a, b).is_finite and rho(b, c).is_finite:
        assert Q.leq(rho(a, c).value, Q.mul(rho(a, b).value, rho(b, c).value))


@given(vectors(m=4, regular=True), vectors(m=4, regular=True))
def test_rho_is_chebyshev_on_finite_max_plus(a, b):
    assert rho(a, b).value == chebyshev(a, b)
