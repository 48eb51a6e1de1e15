import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schurcohn.exact import PreconditionError, binomial
from schurcohn.identities import permutation_sign
from schurcohn.linalg import cauchy_alternant, cauchy_alternant_odd, det, ds, ds_minor, hilbert_minor


def leibniz_det(M):
    """Permutation expansion; slow but independent of elimination."""
    n = len(M)
    total = Fraction(0)
    for sigma in permutations(range(n)):
        term = Fraction(permutation_sign(sigma))
        for i, j in enumerate(sigma):
            term *= M[i][j]
        total += term
    return total


F = Fraction


def test_det_examples():
    assert det([]) == 1
    assert det([[1 if i == j else 0 for j in range(3)] for i in range(3)]) == 1
    assert det([[F(1, 3), F(-1, 5)], [1, F(1, 3)]]) == F(14, 45)


def test_det_needs_pivot_swap():
    assert det([[0, 1], [1, 0]]) == -1
    assert det([[0, 0, 1], [0, 1, 0], [1, 0, 0]]) == -1
    assert det([[1, 2], [2, 4]]) == 0
    assert det([[0, 1, 2], [0, 3, 4], [5, 6, 7]]) == 5 * (4 - 6)


def test_det_rejects_ragged():
    with pytest.raises(PreconditionError):
        det([[1, 2], [3]])


fractions = st.fractions(min_value=-20, max_value=20, max_denominator=30)


@st.composite
def square(draw, max_n=5):
    n = draw(st.integers(0, max_n))
    return [[draw(fractions) for _ in range(n)] for _ in range(n)]


@given(square())
def test_det_matches_leibniz(M):
    assert det(M) == leibniz_det(M)


@given(square(max_n=6), st.data())
def test_det_row_operations(M, data):
    n = len(M)
    if n < 2:
        return
    i, j = data.draw(st.sampled_from([(a, b) for a in range(n) for b in range(n) if a != b]))
    swapped = [list(r) for r in M]
    swapped[i], swapped[j] = swapped[j], swapped[i]
    assert det(swapped) == -det(M)
    c = data.draw(fractions)
    added = [list(r) for r in M]
    added[i] = [a + c * b for a, b in zip(M[i], M[j])]
    assert det(added) == det(M)


def test_cauchy_examples():
    assert cauchy_alternant([], []) == 1
    assert cauchy_alternant([F(4)], [F(-1)]) == F(1, 3)
    assert cauchy_alternant([F(1), F(2)], [F(1), F(2)]) == F(1, 72)


def test_cauchy_odd_examples():
    assert cauchy_alternant_odd([], [F(7)]) == 1
    assert cauchy_alternant_odd([F(2)], [F(1), F(3)]) == F(2, 15)
    assert cauchy_alternant_odd([F(2)], [F(3), F(1)]) == F(-2, 15)


def test_cauchy_rejects_zero_sum():
    with pytest.raises(PreconditionError):
        cauchy_alternant([F(1)], [F(-1)])
    with pytest.raises(PreconditionError):
        cauchy_alternant_odd([F(2)], [F(-2), F(1)])


def _draw_pairs(rng, nx, ny):
    while True:
        X = [F(rng.randint(-30, 30), rng.randint(1, 9)) for _ in range(nx)]
        Y = [F(rng.randint(-30, 30), rng.randint(1, 9)) for _ in range(ny)]
        if all(x + y != 0 for x in X for y in Y):
            return X, Y


@pytest.mark.parametrize("s", range(0, 7))
def test_cauchy_matches_det(s):
    rng = random.Random(100 + s)
    for _ in range(20):
        X, Y = _draw_pairs(rng, s, s)
        assert cauchy_alternant(X, Y) == det([[1 / (x + y) for y in Y] for x in X])


@pytest.mark.parametrize("n", range(1, 7))
def test_cauchy_odd_matches_det(n):
    rng = random.Random(200 + n)
    for _ in range(20):
        X, Y = _draw_pairs(rng, n - 1, n)
        M = [[1 / (x + y) for y in Y] for x in X] + [[F(1)] * n]
        assert cauchy_alternant_odd(X, Y) == det(M)


def test_ds_minor_examples():
    assert ds_minor(1, [1], [1]) == F(1, 3)
    assert ds_minor(2, [1, 2], [1, 2]) == F(32, 525)
    assert ds_minor(2, [1], [2]) == F(-1, 5)
    assert ds(2) / ds(1) == F(256, 1400)


def test_ds_minor_rejects_bad_indices():
    with pytest.raises(PreconditionError):
        ds_minor(2, [1], [1, 2])
    with pytest.raises(PreconditionError):
        ds_minor(2, [3], [1])


@pytest.mark.parametrize("s", range(1, 9))
def test_ds_quotient_recurrence(s):
    want = F(2 ** (8 * s), (s + 1) ** 2 * binomial(4 * s + 3, 2 * s + 1) * binomial(4 * s + 1, 2 * s))
    assert ds(s + 1) / ds(s) == want


@pytest.mark.parametrize("s", range(1, 7))
def test_ds_matches_alternant(s):
    X = [F((2 * j) ** 2) for j in range(1, s + 1)]
    Y = [F(-((2 * k - 1) ** 2)) for k in range(1, s + 1)]
    assert ds(s) == cauchy_alternant(X, Y)


def test_hilbert_examples():
    assert hilbert_minor([]) == 1
    assert hilbert_minor([1]) == F(1, 2)
    assert hilbert_minor([1, 2]) == F(1, 72)
    assert hilbert_minor([1], -1) == 1


@settings(max_examples=50)
@given(st.sets(st.integers(1, 9), max_size=5), st.sampled_from([0, -1]))
def test_hilbert_matches_det(K, shift):
    K = sorted(K)
    assert hilbert_minor(K, shift) == det([[F(1, j + k + shift) for k in K] for j in K])
