"""Exact rational values and the integer combinatorial kernel.

Rationals are :class:`fractions.Fraction`, which is always stored in lowest
terms with a positive denominator.  Index sets are plain tuples of strictly
increasing positive integers.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction
IndexSet = tuple[int, ...]
RationalLike = Union[int, Fraction, str]


class PreconditionError(ValueError):
    """An input violates the documented domain of an operation."""


def rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` / ``"p"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        num, sep, den = text.partition("/")
        try:
            if sep:
                return Fraction(int(num), int(den))
            return Fraction(int(num))
        except (ValueError, ZeroDivisionError) as exc:
            raise PreconditionError(f"not a rational literal: {value!r}") from exc
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def format_rational(q: Fraction) -> str:
    """Canonical ``"p/q"`` text; integers are written ``"p/1"``."""
    return f"{q.numerator}/{q.denominator}"


def index_set(elements: Iterable[int]) -> IndexSet:
    """Validate and freeze a strictly increasing sequence of positive ints."""
    out = tuple(int(e) for e in elements)
    if any(e < 1 for e in out):
        raise PreconditionError(f"index set entries must be >= 1: {out}")
    if any(a >= b for a, b in zip(out, out[1:])):
        raise PreconditionError(f"index set must be strictly increasing: {out}")
    return out


def factorial(n: int) -> int:
    if n < 0:
        raise PreconditionError(f"factorial of negative integer {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, total on the integers.

    Zero for ``k < 0``, and for ``k > n`` when ``n >= 0``.  For negative
    ``n`` the generalized value ``n(n-1)...(n-k+1)/k!`` is returned.
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k) if k <= n else 0
    # (-1)^k C(k-n-1, k)
    return (-1) ** k * math.comb(k - n - 1, k)


def double_factorial(n: int) -> int:
    if n < 0:
        raise PreconditionError(f"double factorial of negative integer {n}")
    out = 1
    for m in range(n, 1, -2):
        out *= m
    return out


def trinomial(n: int, a: int, b: int, c: int) -> int:
    """Multinomial coefficient n!/(a! b! c!)."""
    if min(n, a, b, c) < 0:
        raise PreconditionError("trinomial arguments must be nonnegative")
    if a + b + c != n:
        raise PreconditionError(f"trinomial parts {a}+{b}+{c} do not sum to {n}")
    return math.factorial(n) // (math.factorial(a) * math.factorial(b) * math.factorial(c))


def legendre_eval(d: int, x: RationalLike) -> Fraction:
    """P_d(x) from the sum over j of C(d+j, 2j) C(2j, j) ((x-1)/2)^j."""
    if d < 0:
        raise PreconditionError(f"Legendre degree must be >= 0, got {d}")
    t = (rational(x) - 1) / 2
    total = Fraction(0)
    power = Fraction(1)
    for j in range(d + 1):
        total += binomial(d + j, 2 * j) * binomial(2 * j, j) * power
        power *= t
    return total
