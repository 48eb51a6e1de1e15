from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from schurcohn.exact import (
    PreconditionError,
    binomial,
    double_factorial,
    factorial,
    format_rational,
    index_set,
    legendre_eval,
    rational,
    trinomial,
)


def legendre_recurrence(d, x):
    """Bonnet's three-term recurrence, used only as an oracle."""
    p0, p1 = Fraction(1), Fraction(x)
    if d == 0:
        return p0
    for n in range(1, d):
        p0, p1 = p1, ((2 * n + 1) * x * p1 - n * p0) / (n + 1)
    return p1


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (7, 5040)])
def test_factorial(n, expected):
    assert factorial(n) == expected


@pytest.mark.parametrize("n, k, expected", [(4, 2, 6), (5, -1, 0), (6, 3, 20), (3, 5, 0), (0, 0, 1)])
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (5, 15), (8, 384)])
def test_double_factorial(n, expected):
    assert double_factorial(n) == expected


@pytest.mark.parametrize("args, expected", [((6, 2, 2, 2), 90), ((8, 0, 4, 4), 70), ((2, 2, 0, 0), 1)])
def test_trinomial(args, expected):
    assert trinomial(*args) == expected


def test_trinomial_rejects_bad_parts():
    with pytest.raises(PreconditionError):
        trinomial(5, 2, 2, 2)


@pytest.mark.parametrize("d, x, expected", [(3, 1, 1), (2, 3, 13), (4, 3, 321), (3, 3, 63)])
def test_legendre_examples(d, x, expected):
    assert legendre_eval(d, x) == expected


def test_legendre_closed_forms():
    x = Fraction(3)
    assert legendre_eval(2, x) == (3 * x**2 - 1) / 2
    assert legendre_eval(4, x) == (35 * x**4 - 30 * x**2 + 3) / 8


@given(st.integers(0, 30), st.fractions(max_denominator=50).filter(lambda q: abs(q) < 100))
def test_legendre_matches_recurrence(d, x):
    assert legendre_eval(d, x) == legendre_recurrence(d, x)


@given(st.integers(0, 40))
def test_legendre_at_plus_minus_one(d):
    assert legendre_eval(d, 1) == 1
    assert legendre_eval(d, -1) == (-1) ** d


@given(st.integers(1, 200))
def test_factorial_step(n):
    assert factorial(n) == n * factorial(n - 1)


@given(st.integers(0, 80), st.integers(0, 80))
def test_binomial_symmetry_and_pascal(n, k):
    if k <= n:
        assert binomial(n, k) == binomial(n, n - k)
    if n >= 1:
        assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


@given(st.integers(2, 200))
def test_double_factorial_step(n):
    assert double_factorial(n) == n * double_factorial(n - 2)


@given(st.integers(0, 100))
def test_double_factorial_product(m):
    assert double_factorial(2 * m) * double_factorial(max(2 * m - 1, 0)) == factorial(2 * m)


@given(st.integers(0, 12), st.integers(0, 12), st.integers(0, 12))
def test_trinomial_as_binomial_product(a, b, c):
    n = a + b + c
    assert trinomial(n, a, b, c) == binomial(n, a) * binomial(n - a, b)


nonzero = st.integers(-10**6, 10**6).filter(bool)


@given(st.integers(-10**6, 10**6), nonzero, st.integers(-10**6, 10**6), nonzero)
def test_rational_sum_cross_multiplication(a, b, c, d):
    got = Fraction(a, b) + Fraction(c, d)
    num, den = a * d + c * b, b * d
    assert got.numerator * den == num * got.denominator
    assert got.denominator > 0
    from math import gcd

    assert gcd(abs(got.numerator), got.denominator) == 1


def test_zero_is_canonical():
    z = Fraction(0, 7)
    assert (z.numerator, z.denominator) == (0, 1)


@pytest.mark.parametrize("text, expected", [("224/45", Fraction(224, 45)), ("5", Fraction(5)), ("-6/4", Fraction(-3, 2))])
def test_rational_parsing(text, expected):
    assert rational(text) == expected


def test_rational_parsing_rejects_garbage():
    with pytest.raises(PreconditionError):
        rational("1/0")
    with pytest.raises(PreconditionError):
        rational("x")


@given(st.fractions())
def test_rational_text_round_trip(q):
    assert rational(format_rational(q)) == q


def test_index_set_validation():
    assert index_set([1, 3, 4]) == (1, 3, 4)
    with pytest.raises(PreconditionError):
        index_set([2, 2])
    with pytest.raises(PreconditionError):
        index_set([0, 1])
