from fractions import Fraction as F

import pytest

from schurcohn.exact import PreconditionError, binomial
from schurcohn.volumes import (
    RATIO_METHODS,
    Signature,
    applicable_methods,
    evenalt_binomdet,
    evenalt_trinomial,
    mixed_matrix,
    ratio,
    ratio_legendre_s1,
    real_even_closed,
    row_sums,
    total_ratio,
    v_full,
    v_mixed,
    v_real,
    v_real_det,
    v_totally_complex,
    volume_table,
)


def test_signature_validation():
    assert Signature(5, 2).r == 1
    for d, s in [(0, 0), (3, 2), (4, -1)]:
        with pytest.raises(PreconditionError):
            Signature(d, s)


@pytest.mark.parametrize("d, expected", [(1, 2), (2, 4), (3, F(16, 3)), (4, F(64, 9))])
def test_v_full(d, expected):
    assert v_full(d) == expected


def test_v_full_two_is_triangle_area():
    # E_2 is the triangle with vertices (-2, 1), (2, 1), (0, -1)
    (x1, y1), (x2, y2), (x3, y3) = (-2, 1), (2, 1), (0, -1)
    area = F(abs(x1 * (y2 - y3) + x2 * (y3 - y1) + x3 * (y1 - y2)), 2)
    assert v_full(2) == area


@pytest.mark.parametrize("d, expected", [(1, 2), (2, F(4, 3)), (3, F(16, 45))])
def test_v_real(d, expected):
    assert v_real(d) == expected
    assert v_real_det(d) == expected


@pytest.mark.parametrize("d", range(1, 13))
def test_v_real_routes_agree(d):
    assert v_real(d) == v_real_det(d)


@pytest.mark.parametrize("s", range(1, 7))
def test_v_real_even_closed(s):
    assert v_real(2 * s) == real_even_closed(s)


def test_totally_complex_examples():
    assert v_totally_complex(1, "closed") == v_totally_complex(1, "determinant") == F(8, 3)
    assert v_totally_complex(2, "determinant") == F(2048, 525)
    assert v_totally_complex(2, "closed") == F(2048, 525)


@pytest.mark.parametrize("s", range(1, 7))
def test_totally_complex_routes_agree(s):
    assert v_totally_complex(s, "closed") == v_totally_complex(s, "determinant")


def test_v_mixed_examples():
    assert v_mixed(2, 1) == F(8, 3)
    assert v_mixed(3, 1) == F(224, 45)
    assert v_mixed(2, 0) == F(4, 3)
    assert mixed_matrix(3, (1,)) == [[F(1, 3), F(-1, 5)], [1, F(1, 3)]]


def test_v_mixed_rejections():
    with pytest.raises(PreconditionError, match="even degree"):
        v_mixed(3, 1, "cols")
    with pytest.raises(PreconditionError, match="s <= n-1"):
        v_mixed(3, 2)


@pytest.mark.parametrize("n", range(1, 6))
def test_v_mixed_rows_equal_cols(n):
    for s in range(n + 1):
        assert v_mixed(2 * n, s, "rows") == v_mixed(2 * n, s, "cols")


@pytest.mark.parametrize("d", range(1, 11))
def test_v_mixed_matches_ratio(d):
    for s in range(d // 2 + 1):
        assert v_mixed(d, s) == v_real(d) * ratio(d, s, "binomdet")


@pytest.mark.parametrize("method", RATIO_METHODS)
def test_ratio_spot_values(method):
    assert ratio(2, 1, method) == 2
    assert ratio(4, 2, method) == 96
    assert ratio(4, 1, method) == 78


def test_ratio_hand_expansion_d4_s1():
    # K = {}, {1}, {2} contribute -2, 45, 35
    assert -2 + 45 + 35 == ratio(4, 1, "hilbert")


@pytest.mark.parametrize("d", range(1, 13))
def test_ratio_routes_agree(d):
    for s in range(d // 2 + 1):
        values = {ratio(d, s, m) for m in applicable_methods(d, s)}
        if d % 2 == 0:
            values |= {evenalt_trinomial(d, s), evenalt_binomdet(d, s)}
        assert len(values) == 1, (d, s, values)
        (q,) = values
        assert q.denominator == 1 and q > 0


def test_ratio_rejections():
    with pytest.raises(PreconditionError):
        ratio(3, 1, "evenalt")
    with pytest.raises(PreconditionError):
        ratio(3, 2, "binomdet")
    with pytest.raises(PreconditionError):
        ratio(3, 2, "detmix")
    with pytest.raises(PreconditionError):
        ratio(4, 1, "nope")


@pytest.mark.parametrize("d, expected", [(1, 0), (2, 2), (3, 14), (4, 78)])
def test_ratio_legendre(d, expected):
    assert ratio_legendre_s1(d) == expected


@pytest.mark.parametrize("d", range(2, 13))
def test_legendre_matches_ratio(d):
    assert ratio_legendre_s1(d) == ratio(d, 1)


@pytest.mark.parametrize("s", range(1, 7))
def test_totally_complex_ratio(s):
    assert ratio(2 * s, s) == 2 ** (2 * s * (s - 1)) * binomial(2 * s, s)


@pytest.mark.parametrize("d, expected", [(1, 1), (2, 3), (3, 15), (4, 175)])
def test_total_ratio(d, expected):
    assert total_ratio(d, "closed") == expected
    assert total_ratio(d, "det") == expected


@pytest.mark.parametrize("d", range(1, 13))
def test_total_ratio_is_sum_of_ratios(d):
    total = sum(ratio(d, s) for s in range(d // 2 + 1))
    assert total == total_ratio(d, "closed") == total_ratio(d, "det")


@pytest.mark.parametrize("d", range(1, 13))
def test_partition_identity(d):
    assert sum(v_real(d) * ratio(d, s) for s in range(d // 2 + 1)) == v_full(d)


def test_volume_table_small():
    got = {(r.signature.d, r.signature.s): r.value for r in volume_table(2)}
    assert got == {(1, 0): 2, (2, 0): F(4, 3), (2, 1): F(8, 3)}
    assert [(r.signature.d, r.signature.s) for r in volume_table(1)] == [(1, 0)]
    assert {(r.signature.d, r.signature.s): r.value for r in volume_table(3)}[(3, 1)] == F(224, 45)


def test_volume_table_parallel_matches_serial():
    serial = volume_table(7)
    assert volume_table(7, workers=2) == serial
    for d, (total, full) in row_sums(serial).items():
        assert total == full
