"""Exact determinants and the closed-form Cauchy alternants.

Matrices are square lists of rows of Fractions (anything ``Fraction``
accepts works as an entry).  The empty matrix has determinant 1.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .exact import IndexSet, PreconditionError, index_set

RationalMatrix = Sequence[Sequence[Fraction]]


def _check_square(M: RationalMatrix) -> int:
    n = len(M)
    for i, row in enumerate(M):
        if len(row) != n:
            raise PreconditionError(f"row {i} has length {len(row)}, expected {n}")
    return n


def bareiss_det(A: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix (consumes ``A``)."""
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = A[k][k]
        row_k = A[k]
        for i in range(k + 1, n):
            row_i = A[i]
            a_ik = row_i[k]
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                row_i[j] = (pivot * row_i[j] - a_ik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * A[n - 1][n - 1]


def det(M: RationalMatrix) -> Fraction:
    """Exact determinant.

    Each row is scaled by the lcm of its denominators, the resulting integer
    matrix goes through Bareiss elimination, and the scale is divided out.
    """
    n = _check_square(M)
    rows: list[list[int]] = []
    scale = 1
    for row in M:
        fr = [Fraction(x) for x in row]
        lcm = 1
        for x in fr:
            lcm = math.lcm(lcm, x.denominator)
        rows.append([x.numerator * (lcm // x.denominator) for x in fr])
        scale *= lcm
    return Fraction(bareiss_det(rows), scale)


def _pair_sum(x: Fraction, y: Fraction, j: int, k: int) -> Fraction:
    s = x + y
    if s == 0:
        raise PreconditionError(f"X[{j}] + Y[{k}] = 0 makes a matrix entry undefined")
    return s


def cauchy_alternant(X: Sequence[Fraction], Y: Sequence[Fraction]) -> Fraction:
    """det(1/(X_j + Y_k)) via the Cauchy double alternant product."""
    if len(X) != len(Y):
        raise PreconditionError(f"|X| = {len(X)} differs from |Y| = {len(Y)}")
    X = [Fraction(x) for x in X]
    Y = [Fraction(y) for y in Y]
    s = len(X)
    num = Fraction(1)
    for j in range(s):
        for k in range(j + 1, s):
            num *= (X[j] - X[k]) * (Y[j] - Y[k])
    den = Fraction(1)
    for j in range(s):
        for k in range(s):
            den *= _pair_sum(X[j], Y[k], j, k)
    return num / den


def cauchy_alternant_odd(X: Sequence[Fraction], Y: Sequence[Fraction]) -> Fraction:
    """Alternant with ``len(Y) - 1`` rows 1/(X_j + Y_k) and a last row of ones.

    The product of differences carries an extra (-1)^(n-1): it is the limit
    of the full alternant with the last row scaled by X_n -> infinity.
    """
    n = len(Y)
    if n < 1 or len(X) != n - 1:
        raise PreconditionError(f"need |X| = |Y| - 1 >= 0, got |X|={len(X)}, |Y|={n}")
    X = [Fraction(x) for x in X]
    Y = [Fraction(y) for y in Y]
    num = Fraction(1)
    for j in range(n - 1):
        for k in range(j + 1, n - 1):
            num *= X[j] - X[k]
    for j in range(n):
        for k in range(j + 1, n):
            num *= Y[j] - Y[k]
    den = Fraction(1)
    for j in range(n - 1):
        for k in range(n):
            den *= _pair_sum(X[j], Y[k], j, k)
    if (n - 1) % 2:
        num = -num
    return num / den


def ds_minor(s: int, M1: Sequence[int], M2: Sequence[int]) -> Fraction:
    """Minor of (1/((2j)^2 - (2k-1)^2))_{1<=j,k<=s} on rows M1, columns M2.

    Evaluated by elimination, not by the alternant product, so that it stays
    an independent route to the closed forms built on the alternant.
    """
    if s < 1:
        raise PreconditionError(f"s must be positive, got {s}")
    M1, M2 = index_set(M1), index_set(M2)
    if len(M1) != len(M2):
        raise PreconditionError(f"|M1| = {len(M1)} differs from |M2| = {len(M2)}")
    if (M1 and M1[-1] > s) or (M2 and M2[-1] > s):
        raise PreconditionError(f"minor indices must lie in 1..{s}")
    return det([[Fraction(1, (2 * j) ** 2 - (2 * k - 1) ** 2) for k in M2] for j in M1])


def hilbert_minor(K: Sequence[int], shift: int = 0) -> Fraction:
    """det(1/(j + k + shift))_{j,k in K} for shift 0 or -1."""
    if shift not in (0, -1):
        raise PreconditionError(f"shift must be 0 or -1, got {shift}")
    K = index_set(K)
    return cauchy_alternant([Fraction(k) for k in K], [Fraction(k + shift) for k in K])


def ds(s: int) -> Fraction:
    """D_s, the full s x s determinant."""
    full = range(1, s + 1)
    return ds_minor(s, full, full)


__all__ = [
    "RationalMatrix",
    "IndexSet",
    "bareiss_det",
    "det",
    "cauchy_alternant",
    "cauchy_alternant_odd",
    "ds_minor",
    "ds",
    "hilbert_minor",
]
