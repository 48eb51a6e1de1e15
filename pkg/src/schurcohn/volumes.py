"""Volumes v_d^(s) of the signature classes of the Schur-Cohn region.

Every formula is implemented from its own expression so that the different
routes can be compared exactly:

* ``v_full``               total volume of the region,
* ``v_real``, ``v_real_det`` all roots real (product vs. alternant),
* ``v_totally_complex``    d = 2s (product vs. D_s determinant),
* ``v_mixed``              sums of determinants over row/column selections,
* ``ratio``                v_d^(s) / v_d^(0) by five routes,
* ``total_ratio``          v_d / v_d^(0) by product and by determinant.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator

from .exact import PreconditionError, binomial, factorial, legendre_eval, trinomial
from .linalg import cauchy_alternant, cauchy_alternant_odd, det, ds, hilbert_minor

RATIO_METHODS = ("trinomial", "hilbert", "binomdet", "evenalt", "detmix")
TOTALLY_COMPLEX_METHODS = ("closed", "determinant")
MIXED_VARIANTS = ("rows", "cols")


@dataclass(frozen=True, order=True)
class Signature:
    d: int
    s: int

    def __post_init__(self):
        if self.d < 1 or self.s < 0 or 2 * self.s > self.d:
            raise PreconditionError(f"need 0 <= 2s <= d and d >= 1, got d={self.d}, s={self.s}")

    @property
    def r(self) -> int:
        return self.d - 2 * self.s


@dataclass(frozen=True)
class VolumeRecord:
    signature: Signature
    value: Fraction
    method: str


def _check_degree(d: int) -> None:
    if d < 1:
        raise PreconditionError(f"degree must be >= 1, got {d}")


def v_full(d: int) -> Fraction:
    _check_degree(d)
    out = Fraction(2) ** d
    for j in range(1, d // 2 + 1):
        out *= (1 + Fraction(1, 2 * j)) ** (2 * j - d)
    return out


def v_real(d: int) -> Fraction:
    _check_degree(d)
    out = Fraction(2) ** (d * (d + 1) // 2)
    for j in range(1, d + 1):
        out *= Fraction(factorial(j - 1) ** 2, factorial(2 * j - 1))
    return out


def v_real_det(d: int) -> Fraction:
    """Totally real volume from the alternant with X_j = 2j, Y_k = 2k - 1.

    The factor 1/(2k-1) is pulled out of every column first.
    """
    _check_degree(d)
    n = (d + 1) // 2
    col_factor = Fraction(1)
    for k in range(1, n + 1):
        col_factor /= 2 * k - 1
    Y = [Fraction(2 * k - 1) for k in range(1, n + 1)]
    if d % 2 == 0:
        X = [Fraction(2 * j) for j in range(1, n + 1)]
        return 2**d * col_factor * cauchy_alternant(X, Y)
    X = [Fraction(2 * j) for j in range(1, n)]
    return 2**d * col_factor * cauchy_alternant_odd(X, Y)


def real_even_closed(s: int) -> Fraction:
    """v_{2s}^(0) as 2^{s(2s+1)}/(2s)! over prod_{j<2s} C(2j+1, j)."""
    if s < 1:
        raise PreconditionError(f"s must be positive, got {s}")
    den = factorial(2 * s)
    for j in range(2 * s):
        den *= binomial(2 * j + 1, j)
    return Fraction(2 ** (s * (2 * s + 1)), den)


def v_totally_complex(s: int, method: str = "closed") -> Fraction:
    if s < 1:
        raise PreconditionError(f"s must be positive, got {s}")
    if method == "closed":
        den = factorial(s) ** 2
        for j in range(2 * s):
            den *= binomial(2 * j + 1, j)
        return Fraction(2 ** (s * (4 * s - 1)), den)
    if method == "determinant":
        return 2 ** (3 * s) * ds(s)
    raise PreconditionError(f"unknown method {method!r}; expected one of {TOTALLY_COMPLEX_METHODS}")


def _complex_entry(j: int, k: int) -> Fraction:
    return Fraction(1, (2 * j) ** 2 - (2 * k - 1) ** 2)


def _real_entry(j: int, k: int) -> Fraction:
    return Fraction(1, (2 * k - 1) * (2 * j + 2 * k - 1))


def mixed_matrix(d: int, J: tuple[int, ...], variant: str = "rows") -> list[list[Fraction]]:
    """The n x n matrix whose determinant is summed over J in ``v_mixed``."""
    n = (d + 1) // 2
    Jset = set(J)
    rows = []
    for j in range(1, n + 1):
        if d % 2 == 1 and j == n:
            rows.append([Fraction(1, 2 * k - 1) for k in range(1, n + 1)])
            continue
        row = []
        for k in range(1, n + 1):
            selected = j in Jset if variant == "rows" else k in Jset
            row.append(_complex_entry(j, k) if selected else _real_entry(j, k))
        rows.append(row)
    return rows


def v_mixed(d: int, s: int, variant: str = "rows") -> Fraction:
    """v_d^(s) as 2^{d+s} times a sum of determinants over s-subsets J.

    For odd d = 2n - 1 only the row form exists, with J drawn from 1..n-1,
    so s <= n - 1 is required.
    """
    if variant not in MIXED_VARIANTS:
        raise PreconditionError(f"unknown variant {variant!r}; expected one of {MIXED_VARIANTS}")
    if d % 2 == 1:
        n = (d + 1) // 2
        if variant == "cols":
            raise PreconditionError("the column variant exists only for even degree")
        if s > n - 1:
            raise PreconditionError(f"odd degree d={d}=2n-1 restricts the determinant sum to s <= n-1 = {n - 1}, got s={s}")
        pool = range(1, n)
    else:
        pool = range(1, d // 2 + 1)
    Signature(d, s)
    total = Fraction(0)
    for J in combinations(pool, s):
        total += det(mixed_matrix(d, J, variant))
    return 2 ** (d + s) * total


def _subsets(n: int) -> Iterator[tuple[int, ...]]:
    """Subsets of {1..n} by ascending bitmask."""
    for mask in range(1 << n):
        yield tuple(k for k in range(1, n + 1) if mask >> (k - 1) & 1)


def _outer_weight(n: int, s: int, K: tuple[int, ...]) -> int:
    return binomial(n - len(K), s - len(K)) * (-1) ** ((s + len(K)) % 2)


def _ratio_trinomial(d: int, s: int) -> Fraction:
    n = d // 2
    total = Fraction(0)
    for K in _subsets(n):
        w = _outer_weight(n, s, K)
        if w == 0:
            continue
        term = Fraction(1)
        for k in K:
            term *= Fraction(trinomial(d + 2 * k, d - 2 * k, 2 * k, 2 * k), 2)
        for j, k in combinations(K, 2):
            term *= Fraction((k - j) ** 2, (k + j) ** 2)
        total += w * term
    return total


def _ratio_hilbert(d: int, s: int) -> Fraction:
    n = d // 2
    total = Fraction(0)
    for K in _subsets(n):
        w = _outer_weight(n, s, K)
        if w == 0:
            continue
        term = Fraction(1)
        for k in K:
            term *= binomial(d + 2 * k, 4 * k) * binomial(4 * k - 1, 2 * k - 1) * 2 * k
        total += w * term * hilbert_minor(K, 0)
    return total


def binomial_matrix(d: int, K: tuple[int, ...]) -> list[list[Fraction]]:
    return [
        [Fraction(binomial(d + 2 * j, 2 * j + 2 * k) * binomial(2 * j + 2 * k - 1, 2 * j - 1)) for k in K]
        for j in K
    ]


def _ratio_binomdet(d: int, s: int) -> Fraction:
    n = d // 2
    total = Fraction(0)
    for K in _subsets(n):
        w = _outer_weight(n, s, K)
        if w:
            total += w * det(binomial_matrix(d, K))
    return total


def _ratio_evenalt(d: int, s: int) -> Fraction:
    if d % 2:
        raise PreconditionError(f"evenalt needs even degree, got d={d}")
    n = d // 2
    total = Fraction(0)
    for K in _subsets(n):
        w = _outer_weight(n, s, K)
        if w == 0:
            continue
        term = Fraction(1)
        for k in K:
            term *= binomial(d + 2 * k - 1, 4 * k - 2) * binomial(4 * k - 3, 2 * k - 1) * (2 * k - 1)
        total += w * term * hilbert_minor(K, -1)
    return total


def evenalt_trinomial(d: int, s: int) -> Fraction:
    """Product form of the even-degree alternative (shifted Hilbert) sum."""
    if d % 2:
        raise PreconditionError(f"evenalt needs even degree, got d={d}")
    n = d // 2
    total = Fraction(0)
    for K in _subsets(n):
        w = _outer_weight(n, s, K)
        if w == 0:
            continue
        term = Fraction(1)
        for k in K:
            term *= Fraction(trinomial(d + 2 * k - 1, d - 2 * k + 1, 2 * k - 1, 2 * k - 1), 2)
        for j, k in combinations(K, 2):
            term *= Fraction((k - j) ** 2, (k + j - 1) ** 2)
        total += w * term
    return total


def evenalt_binomdet(d: int, s: int) -> Fraction:
    """Integer-determinant form of the even-degree alternative sum."""
    if d % 2:
        raise PreconditionError(f"evenalt needs even degree, got d={d}")
    n = d // 2
    total = Fraction(0)
    for K in _subsets(n):
        w = _outer_weight(n, s, K)
        if w == 0:
            continue
        M = [
            [Fraction(binomial(d + 2 * j - 1, 2 * j + 2 * k - 2) * binomial(2 * j + 2 * k - 3, 2 * j - 2)) for k in K]
            for j in K
        ]
        total += w * det(M)
    return total


def _ratio_detmix(d: int, s: int) -> Fraction:
    return v_mixed(d, s, "rows") / v_real(d)


_RATIO_IMPLS = {
    "trinomial": _ratio_trinomial,
    "hilbert": _ratio_hilbert,
    "binomdet": _ratio_binomdet,
    "evenalt": _ratio_evenalt,
    "detmix": _ratio_detmix,
}


def ratio(d: int, s: int, method: str = "binomdet") -> Fraction:
    """v_d^(s) / v_d^(0) by the named route.  Always returned as a Fraction."""
    if method != "detmix":
        Signature(d, s)
    try:
        impl = _RATIO_IMPLS[method]
    except KeyError:
        raise PreconditionError(f"unknown method {method!r}; expected one of {RATIO_METHODS}") from None
    return impl(d, s)


def applicable_methods(d: int, s: int) -> list[str]:
    """Ratio routes whose preconditions hold at (d, s)."""
    Signature(d, s)
    methods = ["trinomial", "hilbert", "binomdet"]
    if d % 2 == 0:
        methods.append("evenalt")
    methods.append("detmix")
    return methods


def ratio_legendre_s1(d: int) -> Fraction:
    _check_degree(d)
    return (legendre_eval(d, 3) - 2 * d - 1) / 4


def total_ratio(d: int, method: str = "closed") -> Fraction:
    _check_degree(d)
    if method == "closed":
        n = (d + 1) // 2
        lo, hi = (n + 1, 2 * n) if d % 2 == 0 else (n, 2 * n - 1)
        out = Fraction(1, 2**n)
        for j in range(lo, hi + 1):
            out *= binomial(2 * j, j)
        for j in range(1, n):
            out /= binomial(2 * j, j)
        return out
    if method == "det":
        return det(binomial_matrix(d, tuple(range(1, d // 2 + 1))))
    raise PreconditionError(f"unknown method {method!r}; expected 'closed' or 'det'")


def _table_cell(sig: Signature) -> VolumeRecord:
    return VolumeRecord(sig, v_real(sig.d) * ratio(sig.d, sig.s, "binomdet"), "binomdet")


def volume_table(d_max: int, workers: int = 1) -> list[VolumeRecord]:
    """All v_d^(s) for 1 <= d <= d_max, ordered by (d, s)."""
    _check_degree(d_max)
    cells = [Signature(d, s) for d in range(1, d_max + 1) for s in range(d // 2 + 1)]
    if workers == 1:
        return [_table_cell(c) for c in cells]
    with ProcessPoolExecutor(max_workers=workers or None) as pool:
        return list(pool.map(_table_cell, cells))


def row_sums(records: list[VolumeRecord]) -> dict[int, tuple[Fraction, Fraction]]:
    """Per degree: (sum over s of the table values, v_full(d))."""
    sums: dict[int, Fraction] = {}
    for rec in records:
        d = rec.signature.d
        sums[d] = sums.get(d, Fraction(0)) + rec.value
    return {d: (total, v_full(d)) for d, total in sorted(sums.items())}
