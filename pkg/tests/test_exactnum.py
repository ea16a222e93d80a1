from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from threehalves.exactnum import compare, pow_base, rational, to_decimal


@pytest.mark.parametrize(
    ("p", "q", "expected"),
    [
        (6, 4, Fraction(3, 2)),
        (0, 7, Fraction(0, 1)),
        (-3, -6, Fraction(1, 2)),
        (10, -4, Fraction(-5, 2)),
    ],
)
def test_rational_normalizes(p, q, expected):
    r = rational(p, q)
    assert r == expected
    assert r.denominator > 0


def test_rational_rejects_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        rational(1, 0)


@pytest.mark.parametrize(
    ("base", "k", "expected"),
    [
        (Fraction(3, 2), 2, Fraction(9, 4)),
        (Fraction(3, 2), -3, Fraction(8, 27)),
        (Fraction(3, 2), 0, Fraction(1)),
    ],
)
def test_pow_base(base, k, expected):
    assert pow_base(base, k) == expected


def test_pow_base_rejects_nonpositive():
    with pytest.raises(ValueError):
        pow_base(Fraction(0), 2)
    with pytest.raises(ValueError):
        pow_base(Fraction(-3, 2), 2)


def test_pow_base_inverse_product():
    for k in range(-20, 21):
        assert pow_base(Fraction(3, 2), k) * pow_base(Fraction(3, 2), -k) == 1


@pytest.mark.parametrize(
    ("a", "b", "expected"),
    [
        (Fraction(3, 2), Fraction(10, 7), 1),
        (Fraction(1, 2), Fraction(1, 2), 0),
        (Fraction(0), Fraction(1, 1000000), -1),
    ],
)
def test_compare(a, b, expected):
    assert compare(a, b) == expected


nonzero = st.integers(min_value=-(2 ** 63), max_value=2 ** 63).filter(lambda n: n != 0)
anyint = st.integers(min_value=-(2 ** 63), max_value=2 ** 63)


@given(anyint, nonzero, anyint, nonzero)
def test_field_laws_exact(p, q, r, s):
    a, b = Fraction(p, q), Fraction(r, s)
    assert (a + b) - b == a
    assert a * b == b * a
    assert (a + b) + a == a + (b + a)


@given(anyint, nonzero, anyint, nonzero)
def test_compare_matches_difference_sign(p, q, r, s):
    a, b = Fraction(p, q), Fraction(r, s)
    diff = a - b
    sign = (diff > 0) - (diff < 0)
    assert compare(a, b) == sign


@pytest.mark.parametrize(
    ("x", "places", "expected", "exact"),
    [
        (Fraction(27, 16), 4, "1.6875", True),
        (Fraction(1, 3), 3, "0.333", False),
        (Fraction(-9, 8), 3, "-1.125", True),
        (Fraction(5), 0, "5", True),
        (Fraction(9, 4), 2, "2.25", True),
    ],
)
def test_to_decimal(x, places, expected, exact):
    assert to_decimal(x, places) == (expected, exact)


def test_to_decimal_rejects_negative_places():
    with pytest.raises(ValueError):
        to_decimal(Fraction(1), -1)
