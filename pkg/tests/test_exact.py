from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from spinproj.exact import (
    HalfInt,
    factorial,
    format_rational,
    parse_rational,
    rat_add,
    rat_div,
    rat_mul,
    rat_neg,
    rat_sub,
    spin_range,
)

F = Fraction

rationals = st.builds(
    Fraction,
    st.integers(-10**6, 10**6),
    st.integers(1, 10**6),
)


def test_rat_add_examples():
    assert rat_add(F(1, 2), F(1, 3)) == F(5, 6)
    z = rat_add(F(1, 2), F(-1, 2))
    assert (z.numerator, z.denominator) == (0, 1)
    assert rat_add(parse_rational("2/4"), F(1, 2)) == 1
    assert parse_rational("2/4") == F(1, 2)
    assert parse_rational("2/4").denominator == 2


def test_rat_mul_div_examples():
    assert rat_mul(F(2, 3), F(3, 4)) == F(1, 2)
    assert rat_mul(F(7, 9), F(0)) == F(0, 1)
    q = rat_div(F(1), F(-1, 2))
    assert (q.numerator, q.denominator) == (-2, 1)
    assert rat_sub(F(1), F(1, 3)) == F(2, 3)
    assert rat_neg(F(-5, 7)) == F(5, 7)


def test_rat_div_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        rat_div(F(1), F(0))


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert rat_add(a, b) == rat_add(b, a)
    assert rat_mul(a, rat_add(b, c)) == rat_add(rat_mul(a, b), rat_mul(a, c))
    for x in (rat_add(a, b), rat_mul(a, b), rat_sub(a, c)):
        assert x.denominator > 0
        assert __import__("math").gcd(x.numerator, x.denominator) == 1


@given(rationals)
def test_canonical_idempotent(a):
    once = parse_rational(format_rational(a))
    assert once == a
    assert format_rational(once) == format_rational(a)


@pytest.mark.parametrize("text,value", [
    ("5", F(5)), ("5/1", F(5)), ("-3/2", F(-3, 2)), ("−3/2", F(-3, 2)), ("6/4", F(3, 2)),
])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", ["1.5", "1e3", "", "a/b", "1/2/3", "1/-2"])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_parse_rational_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        parse_rational("1/0")


def test_format_rational():
    assert format_rational(F(5)) == "5"
    assert format_rational(F(-3, 2)) == "-3/2"
    assert format_rational(F(0)) == "0"


def _iterative_factorial(k):
    acc = 1
    for i in range(2, k + 1):
        acc *= i
    return acc


def test_factorial_examples():
    assert factorial(0) == 1
    assert factorial(4) == 24
    assert _iterative_factorial(20) == 2432902008176640000
    assert factorial(20) == 2432902008176640000


def test_factorial_recurrence():
    for k in range(101):
        assert factorial(k + 1) == (k + 1) * factorial(k)
        assert factorial(k) == _iterative_factorial(k)


def test_factorial_rejects_negative():
    with pytest.raises(ValueError):
        factorial(-1)
    with pytest.raises(TypeError):
        factorial(2.0)


def test_halfint_basics():
    h = HalfInt.of("3/2")
    assert h.twice == 3
    assert not h.is_integer
    assert h.to_fraction() == F(3, 2)
    assert str(h) == "3/2"
    assert str(HalfInt.of(2)) == "2"
    assert str(-HalfInt(1)) == "-1/2"
    assert HalfInt(3) - HalfInt(1) == HalfInt(2)
    assert int(HalfInt(4)) == 2
    assert HalfInt.from_json(h.to_json()) == h
    with pytest.raises(ValueError):
        HalfInt.of(F(1, 3))
    with pytest.raises(ValueError):
        int(HalfInt(1))


@given(st.integers(-1000, 1000))
def test_halfint_parity_classification(t):
    h = HalfInt(t)
    assert h.to_fraction().denominator in (1, 2)
    assert h.is_integer == (h.to_fraction().denominator == 1)


def test_spin_range_examples():
    assert spin_range(HalfInt(1)) == [HalfInt(1), HalfInt(-1)]
    assert spin_range(HalfInt(0)) == [HalfInt(0)]
    assert [str(m) for m in spin_range(HalfInt(3))] == ["3/2", "1/2", "-1/2", "-3/2"]
    with pytest.raises(ValueError):
        spin_range(HalfInt(-1))


@given(st.integers(0, 200))
def test_spin_range_properties(two_s):
    ms = spin_range(HalfInt(two_s))
    assert len(ms) == two_s + 1
    assert sum(m.to_fraction() for m in ms) == 0
    assert all(a.to_fraction() - b.to_fraction() == 1 for a, b in zip(ms, ms[1:]))
