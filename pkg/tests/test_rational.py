from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hypersums.rational import (
    SumQuery, binomial, format_rational, parse_rational, pochhammer, ratpow,
)


@pytest.mark.parametrize("n,k,expected", [(4, 2, 6), (5, 0, 1), (3, 5, 0), (3, -1, 0), (-2, 1, 0)])
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_pascal():
    for n in range(1, 31):
        for k in range(-1, n + 2):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_pochhammer_examples():
    assert pochhammer(Fraction(7, 3), 0) == 1
    assert pochhammer(3, 2) == 12
    assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)


@given(st.builds(Fraction, st.integers(-50, 50), st.integers(1, 20)),
       st.integers(0, 8), st.integers(0, 8))
def test_pochhammer_splits(x, m, n):
    assert pochhammer(x, m + n) == pochhammer(x, m) * pochhammer(x + m, n)


def test_ratpow():
    assert ratpow(0, 0) == 1
    assert ratpow(Fraction(-2, 3), 2) == Fraction(4, 9)
    assert ratpow(5, 1) == 5


@pytest.mark.parametrize("text,value", [("14", Fraction(14)), ("-1/2", Fraction(-1, 2)),
                                        ("6/4", Fraction(3, 2)), ("+3", Fraction(3))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["1/0", "1.5", "", "a/b", "1/-2", "--1"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_format_rational_canonical():
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert format_rational(Fraction(28, 2)) == "14"
    assert format_rational(0) == "0"


@given(st.fractions())
def test_format_parse_round_trip(x):
    assert parse_rational(format_rational(x)) == x
    assert format_rational(parse_rational(format_rational(x))) == format_rational(x)


def test_sum_query_validation():
    q = SumQuery(2, "1/2", 3, 4)
    assert q.a == Fraction(1, 2) and q.r == 0
    assert q.ratio == Fraction(1, 6)
    with pytest.raises(ValueError):
        SumQuery(1, 0, 0, 3)
    with pytest.raises(ValueError):
        SumQuery(-1, 0, 1, 3)
    with pytest.raises(ValueError):
        SumQuery(1, 0, 1, 3, -2)
