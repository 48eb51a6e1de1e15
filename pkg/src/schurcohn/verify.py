"""Invariant suites shared by the ``verify`` command and the test-suite.

Every check compares exact rationals; nothing here has a tolerance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterator, Sequence

from . import identities as ident
from .exact import PreconditionError, binomial
from .linalg import ds
from .volumes import (
    applicable_methods,
    evenalt_binomdet,
    evenalt_trinomial,
    ratio,
    ratio_legendre_s1,
    real_even_closed,
    total_ratio,
    v_full,
    v_mixed,
    v_real,
    v_real_det,
    v_totally_complex,
)

SUITES = ("identities", "convolution", "signs", "volumes", "integrality")
DEFAULT_SEED = 20240601


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    passed: bool
    detail: str = ""


def random_point(rng: random.Random, r: int) -> list[Fraction]:
    """Coordinates p/q with p in [-9, 9] minus 0 and q in [10, 19], so |x| < 1."""
    nums = [n for n in range(-9, 10) if n]
    return [Fraction(rng.choice(nums), rng.randint(10, 19)) for _ in range(r)]


def _agree_at_points(
    rng: random.Random, r: int, trials: int, lhs: Callable, rhs: Callable, max_redraws: int = 1000
) -> tuple[bool, str]:
    """Compare two functions at random points, redrawing points outside both domains."""
    done = 0
    redraws = 0
    while done < trials:
        X = random_point(rng, r)
        try:
            a, b = lhs(X), rhs(X)
        except PreconditionError:
            redraws += 1
            if redraws > max_redraws:
                return False, f"too many excluded points at r={r}"
            continue
        if a != b:
            return False, f"r={r}, X={[str(x) for x in X]}: {a} != {b}"
        done += 1
    return True, f"r={r}, {trials} points"


def identities_suite(seed: int = DEFAULT_SEED, trials: int = 100, r_max: int = 6) -> Iterator[Check]:
    rng = random.Random(seed)
    for r in range(r_max + 1):
        ok, msg = _agree_at_points(rng, r, trials, ident.h_perm, ident.h_closed)
        yield Check("identities", "h_perm == h_closed", ok, msg)
    for r in range(r_max + 1):
        ok, msg = _agree_at_points(rng, r, trials, ident.s_perm, ident.s_closed)
        yield Check("identities", "s_perm == s_closed", ok, msg)

    def swapped(f):
        return lambda X: -f([X[1], X[0]] + list(X[2:]))

    for r in range(2, r_max + 1):
        ok, msg = _agree_at_points(rng, r, 20, ident.h_closed, swapped(ident.h_closed))
        yield Check("identities", "h_closed antisymmetric", ok, msg)
        ok, msg = _agree_at_points(rng, r, 20, ident.s_closed, swapped(ident.s_closed))
        yield Check("identities", "s_closed antisymmetric", ok, msg)


def convolution_suite(
    seed: int = DEFAULT_SEED, trials: int = 50, r_max: int = 8, rec_trials: int = 20, rec_max: int = 6
) -> Iterator[Check]:
    rng = random.Random(seed + 1)
    for r in range(r_max + 1):
        ok, msg = _agree_at_points(rng, r, trials, ident.conv_h_lhs, ident.conv_h_rhs)
        yield Check("convolution", "H convolution", ok, msg)
    for r in range(r_max + 1):
        ok, msg = _agree_at_points(rng, r, trials, ident.conv_s_lhs, ident.conv_s_rhs)
        yield Check("convolution", "S convolution", ok, msg)
    yield Check("convolution", "recurrence base g_1 = 2", ident.conv_h_rhs([Fraction(1, 7)]) == 2)
    for r in range(2, rec_max + 1):
        ok, msg = _agree_at_points(rng, r, rec_trials, ident.conv_h_rhs, ident.conv_h_recurrence)
        yield Check("convolution", "recurrence for the product side", ok, msg)
        ok, msg = _agree_at_points(rng, r, rec_trials, ident.conv_h_lhs, ident.conv_h_recurrence)
        yield Check("convolution", "recurrence for the subset-sum side", ok, msg)


def sign_lemma_failures(nu: int) -> list[tuple[tuple[int, ...], int, int]]:
    """Parity balanced M in {1..2nu} where oe_sign(M) oe_sign(N) disagrees with the parity sum."""
    universe = range(1, 2 * nu + 1)
    bad = []
    for size in range(0, 2 * nu + 1, 2):
        for M in combinations(universe, size):
            if not ident.parity_split(M).balanced:
                continue
            N = tuple(x for x in universe if x not in M)
            split = ident.parity_split(N)
            lhs = ident.oe_sign(M) * ident.oe_sign(N)
            rhs = (-1) ** ((sum(split.even_part) + sum(split.odd_part)) % 2)
            if lhs != rhs:
                bad.append((M, lhs, rhs))
    return bad


def signs_suite(nu_max: int = 5) -> Iterator[Check]:
    split = ident.parity_split((1, 3, 4, 5, 6))
    yield Check("signs", "parity split of {1,3,4,5,6}", split == ident.ParitySplit((2, 3), (1, 2, 3)))
    yield Check("signs", "oe_sign{1,3,4,5,6} = +1", ident.oe_sign((1, 3, 4, 5, 6)) == 1)
    for nu in range(1, nu_max + 1):
        bad = sign_lemma_failures(nu)
        yield Check("signs", "oe-sign lemma", not bad, f"nu={nu}" + (f", first failure {bad[0]}" if bad else ""))


def ds_quotient(s: int) -> Fraction:
    """Closed value of D_{s+1} / D_s."""
    return Fraction(2 ** (8 * s), (s + 1) ** 2 * binomial(4 * s + 3, 2 * s + 1) * binomial(4 * s + 1, 2 * s))


def volumes_suite(d_max: int = 12, s_max: int = 6, ds_max: int = 8, detmix_n: int = 5) -> Iterator[Check]:
    for d in range(1, d_max + 1):
        for s in range(d // 2 + 1):
            values = {m: ratio(d, s, m) for m in applicable_methods(d, s)}
            if d % 2 == 0:
                values["evenalt_trinomial"] = evenalt_trinomial(d, s)
                values["evenalt_binomdet"] = evenalt_binomdet(d, s)
            if s == 1:
                values["legendre"] = ratio_legendre_s1(d)
            ok = len(set(values.values())) == 1
            yield Check("volumes", "ratio routes agree", ok, f"d={d}, s={s}: {sorted(set(map(str, values.values())))}")
    for d in range(1, d_max + 1):
        total = sum(v_real(d) * ratio(d, s) for s in range(d // 2 + 1))
        yield Check("volumes", "signature classes partition the region", total == v_full(d), f"d={d}")
        yield Check("volumes", "v_real == v_real_det", v_real(d) == v_real_det(d), f"d={d}")
        yield Check("volumes", "total ratio closed == det", total_ratio(d) == total_ratio(d, "det"), f"d={d}")
    for s in range(1, s_max + 1):
        yield Check("volumes", "v_real(2s) closed form", v_real(2 * s) == real_even_closed(s), f"s={s}")
        same = v_totally_complex(s, "closed") == v_totally_complex(s, "determinant")
        yield Check("volumes", "totally complex closed == determinant", same, f"s={s}")
        want = 2 ** (2 * s * (s - 1)) * binomial(2 * s, s)
        yield Check("volumes", "ratio(2s, s) = 2^{2s(s-1)} C(2s, s)", ratio(2 * s, s) == want, f"s={s}")
    for s in range(1, ds_max + 1):
        yield Check("volumes", "D_{s+1}/D_s quotient", ds(s + 1) / ds(s) == ds_quotient(s), f"s={s}")
    for n in range(1, detmix_n + 1):
        for s in range(n + 1):
            rows, cols = v_mixed(2 * n, s, "rows"), v_mixed(2 * n, s, "cols")
            yield Check("volumes", "detmix rows == cols", rows == cols, f"d={2 * n}, s={s}")
    for d in range(1, 2 * detmix_n + 1):
        for s in range(d // 2 + 1):
            ok = v_mixed(d, s) == v_real(d) * ratio(d, s, "binomdet")
            yield Check("volumes", "detmix == v_real * ratio", ok, f"d={d}, s={s}")


def integrality_suite(d_max: int = 12) -> Iterator[Check]:
    for d in range(1, d_max + 1):
        for s in range(d // 2 + 1):
            q = ratio(d, s, "binomdet")
            yield Check("integrality", "ratio is an integer", q.denominator == 1, f"d={d}, s={s}: {q}")
        t = total_ratio(d)
        yield Check("integrality", "total ratio is an odd integer", t.denominator == 1 and t.numerator % 2 == 1, f"d={d}: {t}")


_SUITE_FUNCS = {
    "identities": identities_suite,
    "convolution": convolution_suite,
    "signs": signs_suite,
    "volumes": volumes_suite,
    "integrality": integrality_suite,
}


def run_suites(names: Sequence[str]) -> list[Check]:
    if "all" in names:
        names = SUITES
    checks: list[Check] = []
    for name in names:
        try:
            func = _SUITE_FUNCS[name]
        except KeyError:
            raise PreconditionError(f"unknown suite {name!r}; expected one of {SUITES + ('all',)}") from None
        checks.extend(func())
    return checks
