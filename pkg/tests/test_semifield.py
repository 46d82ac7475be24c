import pickle
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tropic import (MAX_PLUS, MAX_PLUS_Q, MAX_TIMES, MIN_PLUS, ZERO, Kind, get_semifield)
from tropic.errors import InversionOfZero, UnknownSemifield, ZeroToNonpositivePower

from strategies import halves, scalars

ALL = [MAX_PLUS, MAX_PLUS_Q, MIN_PLUS, MAX_TIMES]


def elements(sf):
    """Random elements of ``sf`` including zero."""
    if sf is MAX_TIMES:
        finite = st.integers(1, 64).map(lambda k: k / 8)
    elif sf.exact:
        finite = halves()
    else:
        finite = st.integers(-40, 40).map(lambda k: k / 4)
    return st.one_of(st.just(ZERO), finite, finite)


# -- worked examples -----------------------------------------------------------

def test_add_examples():
    q = MAX_PLUS_Q
    assert q.add(3, 5) == 5
    assert q.add(ZERO, 7) == 7
    assert q.add(2, 2) == 2


def test_mul_examples():
    q = MAX_PLUS_Q
    assert q.mul(3, 5) == 8
    assert q.mul(ZERO, 5) is ZERO
    assert MAX_TIMES.mul(2.0, 4.0) == 8.0


def test_inv_examples():
    q = MAX_PLUS_Q
    assert q.inv(3) == -3
    assert q.inv(0) == 0
    assert MAX_TIMES.inv(4.0) == 0.25
    with pytest.raises(InversionOfZero):
        q.inv(ZERO)


def test_pow_examples():
    q = MAX_PLUS_Q
    assert q.pow(Fraction(6), Fraction(1, 2)) == 3
    assert q.pow(Fraction(7), 0) == q.one == 0
    assert MAX_TIMES.pow(9.0, Fraction(1, 2)) == pytest.approx(3.0)
    assert q.pow(ZERO, 2) is ZERO
    with pytest.raises(ZeroToNonpositivePower):
        q.pow(ZERO, 0)
    with pytest.raises(ZeroToNonpositivePower):
        q.pow(ZERO, -1)


def test_leq_examples():
    q = MAX_PLUS_Q
    assert q.leq(ZERO, Fraction(-100))
    assert q.leq(2, 5)
    assert not q.leq(5, 2)


def test_min_plus_reverses_numeric_order():
    assert MIN_PLUS.add(3.0, 5.0) == 3.0
    assert MIN_PLUS.leq(5.0, 3.0)
    assert MIN_PLUS.leq(ZERO, -1e9)


def test_rational_kind_is_exact():
    assert MAX_PLUS_Q.tol == 0
    assert MAX_PLUS_Q.exact
    assert isinstance(MAX_PLUS_Q.scalar(0.5), Fraction)
    with pytest.raises(ValueError):
        get_semifield("max-plus-rational", tol=1e-3)


def test_float_tolerance_policy():
    sf = get_semifield("max-plus", tol=1e-6)
    assert sf.eq(1.0, 1.0 + 5e-7)
    assert not sf.eq(1.0, 1.0 + 5e-6)
    assert sf.eq(1e7, 1e7 + 1.0)  # relative part
    assert sf.is_one(3e-7)


def test_tolerance_env_override(monkeypatch):
    monkeypatch.setenv("TROPIC_TOLERANCE", "0.01")
    assert get_semifield("max-plus").tol == 0.01
    assert get_semifield("max-plus", tol=0.5).tol == 0.5
    monkeypatch.delenv("TROPIC_TOLERANCE")
    assert get_semifield("max-plus").tol == 1e-9


@pytest.mark.parametrize("name,kind", [
    ("max-plus-rational", Kind.MAX_PLUS_RATIONAL),
    ("maxplus-rational", Kind.MAX_PLUS_RATIONAL),
    ("max-plus", Kind.MAX_PLUS_FLOAT),
    ("MIN-PLUS-FLOAT", Kind.MIN_PLUS_FLOAT),
    ("max-times", Kind.MAX_TIMES_FLOAT),
])
def test_kind_names(name, kind):
    assert get_semifield(name).kind is kind


def test_unknown_kind():
    with pytest.raises(UnknownSemifield):
        get_semifield("plus-times")


@pytest.mark.parametrize("sf,token,value", [
    (MAX_PLUS_Q, "-inf", ZERO),
    (MAX_PLUS_Q, "3/4", Fraction(3, 4)),
    (MAX_PLUS_Q, "0.25", Fraction(1, 4)),
    (MAX_PLUS, "-inf", ZERO),
    (MAX_PLUS, "1/2", 0.5),
    (MIN_PLUS, "+inf", ZERO),
    (MAX_TIMES, "0", ZERO),
    (MAX_TIMES, "2.5", 2.5),
])
def test_tokens(sf, token, value):
    x = sf.parse(token)
    assert x is ZERO if value is ZERO else x == value
    assert sf.parse(sf.format(x)) == x


@pytest.mark.parametrize("sf,token", [(MAX_PLUS_Q, "abc"), (MAX_PLUS_Q, "+inf"),
                                      (MAX_TIMES, "-1"), (MAX_PLUS, "nan")])
def test_bad_tokens(sf, token):
    with pytest.raises(ValueError):
        sf.parse(token)


def test_zero_is_a_singleton():
    assert pickle.loads(pickle.dumps(ZERO)) is ZERO


# -- algebraic laws --------------------------------------------------------------

@pytest.mark.parametrize("sf", ALL, ids=str)
def test_laws(sf):
    @given(elements(sf), elements(sf), elements(sf))
    def check(x, y, z):
        add, mul = sf.add, sf.mul
        assert add(x, x) == x
        assert add(sf.zero, x) == x
        assert mul(sf.one, x) == x
        assert mul(sf.zero, x) is ZERO
        assert add(x, y) == add(y, x)
        assert sf.eq(mul(x, y), mul(y, x))
        assert add(add(x, y), z) == add(x, add(y, z))
        assert sf.eq(mul(x, add(y, z)), add(mul(x, y), mul(x, z)))
        # order induced by addition, total
        assert sf.leq(x, y) == sf.eq(add(x, y), y)
        assert sf.leq(x, y) or sf.leq(y, x)
        assert add(x, y) == (y if sf.leq(x, y) else x)
        # isotonicity
        if sf.leq(x, y):
            assert sf.leq(add(x, z), add(y, z))
            assert sf.leq(mul(x, z), mul(y, z))
        if x is not ZERO:
            assert sf.eq(mul(sf.inv(x), x), sf.one)
    check()


@given(halves(), st.fractions(-4, 4, max_denominator=6), st.fractions(-4, 4, max_denominator=6))
def test_pow_laws_exact(x, a, b):
    q = MAX_PLUS_Q
    assert q.pow(x, 1) == x
    assert q.mul(q.pow(x, a), q.pow(x, b)) == q.pow(x, a + b)
    assert q.pow(q.pow(x, a), b) == q.pow(x, a * b)


@given(st.integers(1, 100).map(lambda k: k / 10), st.fractions(-3, 3, max_denominator=4),
       st.fractions(-3, 3, max_denominator=4))
def test_pow_laws_max_times(x, a, b):
    sf = MAX_TIMES
    assert sf.eq(sf.pow(sf.pow(x, a), b), sf.pow(x, a * b))
    assert sf.eq(sf.mul(sf.pow(x, a), sf.pow(x, b)), sf.pow(x, a + b))


@given(scalars(), scalars())
def test_meet_is_the_smaller(x, y):
    q = MAX_PLUS_Q
    m = q.meet(x, y)
    assert q.leq(m, x) and q.leq(m, y)
    assert m == x or m == y
