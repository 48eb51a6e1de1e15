"""Signed permutation sums H and S, their product forms, and convolutions.

Points are sequences of Fractions in the order of the underlying ordered
set.  Subsets are taken as ordered subsets, so ``X_K`` keeps the relative
order of ``X``.  Empty sums/products follow H() = S() = 1; the convolution
identities at r = 1 need exactly that.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterator, Sequence

from .exact import IndexSet, PreconditionError, index_set

PERM_CAP = 8
SUBSET_CAP = 12

RationalPoint = Sequence[Fraction]


def _point(X: RationalPoint) -> list[Fraction]:
    return [Fraction(x) for x in X]


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation given in one-line notation, by inversion count."""
    inversions = 0
    n = len(perm)
    for i in range(n):
        pi = perm[i]
        for j in range(i + 1, n):
            if pi > perm[j]:
                inversions += 1
    return -1 if inversions & 1 else 1


def signed_permutations(r: int) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Yield (sign, sigma) over S_r in lexicographic one-line order (0-based)."""
    for sigma in permutations(range(r)):
        yield permutation_sign(sigma), sigma


def _check_cap(r: int, cap: int, what: str) -> None:
    if r > cap:
        raise PreconditionError(f"{what}: size {r} exceeds the brute-force cap {cap}")


def h_perm(X: RationalPoint, cap: int = PERM_CAP) -> Fraction:
    """H(X) as the full signed sum over all r! permutations."""
    X = _point(X)
    r = len(X)
    _check_cap(r, cap, "h_perm")
    numer = Fraction(1)
    for x in X:
        numer *= 1 - x
    total = Fraction(0)
    for sign, sigma in signed_permutations(r):
        prod = Fraction(1)
        den = Fraction(1)
        for i, idx in enumerate(sigma):
            prod *= X[idx]
            factor = 1 - prod
            if factor == 0:
                raise PreconditionError(
                    f"h_perm: denominator vanishes at sigma={tuple(s + 1 for s in sigma)}, i={i + 1}"
                )
            den *= factor
        total += sign * numer / den
    return total


def h_closed(X: RationalPoint) -> Fraction:
    X = _point(X)
    out = Fraction(1)
    for j, k in combinations(range(len(X)), 2):
        den = 1 - X[j] * X[k]
        if den == 0:
            raise PreconditionError(f"h_closed: X[{j + 1}]*X[{k + 1}] = 1")
        out *= (X[j] - X[k]) / den
    return out


def s_perm(Y: RationalPoint, cap: int = PERM_CAP) -> Fraction:
    """S(Y) as the full signed sum of reciprocal prefix-sum products."""
    Y = _point(Y)
    r = len(Y)
    _check_cap(r, cap, "s_perm")
    total = Fraction(0)
    for sign, sigma in signed_permutations(r):
        prefix = Fraction(0)
        den = Fraction(1)
        for i, idx in enumerate(sigma):
            prefix += Y[idx]
            if prefix == 0:
                raise PreconditionError(
                    f"s_perm: prefix sum vanishes at sigma={tuple(s + 1 for s in sigma)}, i={i + 1}"
                )
            den *= prefix
        total += sign / den
    return total


def s_closed(Y: RationalPoint) -> Fraction:
    Y = _point(Y)
    out = Fraction(1)
    for j, y in enumerate(Y):
        if y == 0:
            raise PreconditionError(f"s_closed: Y[{j + 1}] = 0")
        out /= y
    for j, k in combinations(range(len(Y)), 2):
        den = Y[k] + Y[j]
        if den == 0:
            raise PreconditionError(f"s_closed: Y[{j + 1}] + Y[{k + 1}] = 0")
        out *= (Y[k] - Y[j]) / den
    return out


def _subset_pairs(r: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    for mask in range(1 << r):
        K = tuple(i for i in range(r) if mask >> i & 1)
        Kc = tuple(i for i in range(r) if not mask >> i & 1)
        yield K, Kc


def conv_h_lhs(X: RationalPoint, cap: int = SUBSET_CAP) -> Fraction:
    """Sum over ordered subsets K of H(X_K) H(X_{complement of K})."""
    X = _point(X)
    _check_cap(len(X), cap, "conv_h_lhs")
    total = Fraction(0)
    for K, Kc in _subset_pairs(len(X)):
        total += h_closed([X[i] for i in K]) * h_closed([X[i] for i in Kc])
    return total


def conv_h_rhs(X: RationalPoint) -> Fraction:
    """Product form of the H-convolution (1-based parity conditions)."""
    X = _point(X)
    r = len(X)
    out = Fraction(2) ** ((r + 1) // 2)
    for j in range(1, r + 1):
        if (j + r) % 2 == 1:
            out *= 1 + X[j - 1]
        if j % 2 == 0:
            out *= 1 - X[j - 1]
    for j, k in combinations(range(1, r + 1), 2):
        if (k - j) % 2 == 0:
            out *= X[j - 1] - X[k - 1]
        else:
            den = 1 - X[j - 1] * X[k - 1]
            if den == 0:
                raise PreconditionError(f"conv_h_rhs: X[{j}]*X[{k}] = 1")
            out /= den
    return out


def conv_s_lhs(Y: RationalPoint, cap: int = SUBSET_CAP) -> Fraction:
    Y = _point(Y)
    _check_cap(len(Y), cap, "conv_s_lhs")
    total = Fraction(0)
    for K, Kc in _subset_pairs(len(Y)):
        total += s_closed([Y[i] for i in K]) * s_closed([Y[i] for i in Kc])
    return total


def conv_s_rhs(Y: RationalPoint) -> Fraction:
    Y = _point(Y)
    r = len(Y)
    out = Fraction(2) ** r
    for j in range(1, r + 1, 2):
        if Y[j - 1] == 0:
            raise PreconditionError(f"conv_s_rhs: Y[{j}] = 0")
        out /= Y[j - 1]
    for j, k in combinations(range(1, r + 1), 2):
        if (k - j) % 2 == 0:
            out *= Y[k - 1] - Y[j - 1]
        else:
            den = Y[k - 1] + Y[j - 1]
            if den == 0:
                raise PreconditionError(f"conv_s_rhs: Y[{j}] + Y[{k}] = 0")
            out /= den
    return out


def conv_h_recurrence(X: RationalPoint) -> Fraction:
    """Right side of the degree-lowering recurrence, applied to ``conv_h_rhs``.

    For r >= 2 this must reproduce ``conv_h_rhs(X)``; both sides of the
    H-convolution satisfy it with base value 2 at r = 1.
    """
    X = _point(X)
    r = len(X)
    if r < 2:
        raise PreconditionError("the recurrence needs r >= 2")
    a = X[r - 2]
    out = (1 + a) * (1 - X[r - 1]) / (1 - a * X[r - 1]) * conv_h_rhs(X[: r - 1])
    for i in range(1, r):
        if (i + r) % 2 == 0:
            swapped = list(X[: r - 1])
            swapped[i - 1] = X[r - 1]
            out -= (1 + a) * (1 - X[i - 1]) / (1 - a * X[i - 1]) * conv_h_rhs(swapped)
    return out


@dataclass(frozen=True)
class ParitySplit:
    even_part: IndexSet
    odd_part: IndexSet

    @property
    def balanced(self) -> bool:
        return len(self.even_part) == len(self.odd_part)

    def reconstruct(self) -> IndexSet:
        return tuple(sorted([2 * x for x in self.even_part] + [2 * x - 1 for x in self.odd_part]))


def parity_split(X: Sequence[int]) -> ParitySplit:
    X = index_set(X)
    return ParitySplit(
        even_part=tuple(x // 2 for x in X if x % 2 == 0),
        odd_part=tuple((x + 1) // 2 for x in X if x % 2 == 1),
    )


def oe_order(X: Sequence[int]) -> IndexSet:
    """Interleave odd and even elements as odd, even, odd, even, ..."""
    X = index_set(X)
    odds = [x for x in X if x % 2]
    evens = [x for x in X if not x % 2]
    if len(odds) != (len(X) + 1) // 2:
        raise PreconditionError(
            f"oe-order needs {(len(X) + 1) // 2} odd and {len(X) // 2} even elements, got {X}"
        )
    out = []
    for i, o in enumerate(odds):
        out.append(o)
        if i < len(evens):
            out.append(evens[i])
    return tuple(out)


def oe_sign(X: Sequence[int]) -> int:
    """Sign of the permutation taking ascending order to increasing oe-order."""
    target = oe_order(X)
    rank = {x: i for i, x in enumerate(sorted(target))}
    return permutation_sign([rank[x] for x in target])
