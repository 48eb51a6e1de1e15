"""Monte-Carlo cross-check of the exact volumes.

Sampled coefficient vectors are exact dyadic rationals, so classification
is exact: contractivity by the Schur-Cohn reduction, signature by Sturm
sequences.  Both run on integer coefficient lists (any rational polynomial
is scaled by a positive common denominator first, which changes neither
the roots nor the sign pattern of the remainder sequence).

Random numbers come from numpy's PCG64.  Chunk ``k`` of a run with seed
``seed`` draws from ``SeedSequence(seed, spawn_key=(k,))``, so the report
depends only on (d, samples, seed) and never on the worker count.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .exact import PreconditionError, binomial

CHUNK_SIZE = 1 << 15
MANTISSA_BITS = 53

# classify() result for a contractive polynomial with a repeated root
DEGENERATE = -2
NOT_CONTRACTIVE = -1


@dataclass(frozen=True)
class RealPolynomial:
    """Monic X^d + a_1 X^(d-1) + ... + a_d, stored as (a_1, ..., a_d)."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(Fraction(a) for a in self.coefficients)
        if not coeffs:
            raise PreconditionError("a monic polynomial needs degree >= 1")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients)

    def integer_coefficients(self) -> list[int]:
        """Descending integer coefficients of a positive multiple of p."""
        lcm = 1
        for a in self.coefficients:
            lcm = math.lcm(lcm, a.denominator)
        return [lcm] + [a.numerator * (lcm // a.denominator) for a in self.coefficients]


def _strip(p: list[int]) -> list[int]:
    i = 0
    while i < len(p) and p[i] == 0:
        i += 1
    return p[i:]


def _primitive(p: list[int]) -> list[int]:
    g = 0
    for c in p:
        g = math.gcd(g, c)
    if g > 1:
        return [c // g for c in p]
    return p


def schur_cohn(desc: Sequence[int]) -> bool:
    """True iff every root of the integer polynomial lies in |z| < 1.

    Reduction step on ascending coefficients c_0..c_d: require |c_0| < |c_d|
    and recurse on (c_d p - c_0 p*)/x, whose leading coefficient
    c_d^2 - c_0^2 stays positive.
    """
    c = list(reversed(desc))
    while len(c) > 1:
        c0, cd = c[0], c[-1]
        if abs(c0) >= abs(cd):
            return False
        m = len(c) - 1
        c = _primitive([cd * c[i + 1] - c0 * c[m - 1 - i] for i in range(m)])
        if not any(c):
            return False
    return True


def _neg_prem(a: list[int], b: list[int]) -> list[int]:
    """A positive multiple of -(a mod b), made primitive."""
    lb = b[0]
    alb = abs(lb)
    slb = 1 if lb > 0 else -1
    nb = len(b)
    a = list(a)
    while a and len(a) >= nb:
        f = slb * a[0]
        for i in range(nb):
            a[i] = alb * a[i] - f * b[i]
        for i in range(nb, len(a)):
            a[i] = alb * a[i]
        a = _strip(a)
    return _primitive([-x for x in a])


def sturm_chain(desc: Sequence[int]) -> list[list[int]]:
    """Sturm sequence p, p', -rem, ... up to (a multiple of) gcd(p, p')."""
    p = _strip(list(desc))
    d = len(p) - 1
    chain = [p]
    if d < 1:
        return chain
    dp = _primitive([c * (d - i) for i, c in enumerate(p[:-1])])
    chain.append(dp)
    while len(chain[-1]) > 1:
        r = _neg_prem(chain[-2], chain[-1])
        if not r:
            break
        chain.append(r)
    return chain


def _sign_changes(signs: list[int]) -> int:
    changes = 0
    prev = 0
    for s in signs:
        if s:
            if prev and s != prev:
                changes += 1
            prev = s
    return changes


def sturm_count(chain: list[list[int]]) -> int:
    """Distinct real roots from the sign changes of a chain at -inf and +inf."""
    at_pos = [1 if q[0] > 0 else -1 for q in chain]
    at_neg = [s if (len(q) - 1) % 2 == 0 else -s for s, q in zip(at_pos, chain)]
    return _sign_changes(at_neg) - _sign_changes(at_pos)


def _exact_div(num: list[Fraction], den: list[Fraction]) -> list[Fraction]:
    num = list(num)
    q = []
    while len(num) >= len(den):
        f = num[0] / den[0]
        q.append(f)
        for i in range(len(den)):
            num[i] -= f * den[i]
        num.pop(0)
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return q


def is_contractive(p: RealPolynomial) -> bool:
    return schur_cohn(p.integer_coefficients())


def real_root_count(p: RealPolynomial) -> int:
    """Number of distinct real roots, via the squarefree part p / gcd(p, p')."""
    desc = p.integer_coefficients()
    g = sturm_chain(desc)[-1]
    if len(g) > 1:
        desc = _exact_div([Fraction(c) for c in desc], [Fraction(c) for c in g])
        lcm = 1
        for c in desc:
            lcm = math.lcm(lcm, c.denominator)
        desc = [int(c * lcm) for c in desc]
    return sturm_count(sturm_chain(desc))


def signature_of(p: RealPolynomial) -> Optional[tuple[int, int]]:
    """(r, s) with r real roots and s conjugate pairs, or None on a repeated root."""
    chain = sturm_chain(p.integer_coefficients())
    if len(chain[-1]) > 1:
        return None
    r = sturm_count(chain)
    return r, (p.degree - r) // 2


def classify(desc: Sequence[int]) -> int:
    """s for a contractive squarefree polynomial, else NOT_CONTRACTIVE / DEGENERATE."""
    if not schur_cohn(desc):
        return NOT_CONTRACTIVE
    chain = sturm_chain(desc)
    if len(chain[-1]) > 1:
        return DEGENERATE
    return (len(desc) - 1 - sturm_count(chain)) // 2


def box_bounds(d: int) -> list[int]:
    """Half-widths C(d, i): every contractive a_i satisfies |a_i| <= C(d, i)."""
    return [binomial(d, i) for i in range(1, d + 1)]


def box_volume(d: int) -> Fraction:
    return Fraction(math.prod(2 * b for b in box_bounds(d)))


@dataclass(frozen=True)
class SignatureTally:
    s: int
    hits: int
    estimate: float
    stderr: float


@dataclass(frozen=True)
class McReport:
    d: int
    samples: int
    seed: int
    box_volume: Fraction
    per_s: tuple[SignatureTally, ...]
    misses: int
    degenerate_count: int

    @property
    def total_hits(self) -> int:
        return sum(t.hits for t in self.per_s)

    @property
    def total_estimate(self) -> float:
        return float(self.box_volume) * self.total_hits / self.samples

    @property
    def total_stderr(self) -> float:
        return _binomial_stderr(self.box_volume, self.total_hits, self.samples)


def _binomial_stderr(box: Fraction, hits: int, n: int) -> float:
    p = hits / n
    return float(box) * math.sqrt(p * (1 - p) / n)


def chunk_rng(seed: int, chunk: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(chunk,))))


def _run_chunk(d: int, seed: int, chunk: int, count: int) -> list[int]:
    """Tallies [hits_0, ..., hits_{d//2}, misses, degenerate] for one chunk."""
    rng = chunk_rng(seed, chunk)
    draws = rng.integers(0, 1 << MANTISSA_BITS, size=(count, d), dtype=np.uint64).tolist()
    bounds = box_bounds(d)
    lead = 1 << MANTISSA_BITS
    offset = 1 - lead
    tally = [0] * (d // 2 + 3)
    for row in draws:
        # a_i = C(d,i) * (2m + 1 - 2^53) / 2^53, an odd multiple of 2^-53 inside the box
        desc = [lead] + [b * (2 * m + offset) for b, m in zip(bounds, row)]
        s = classify(desc)
        if s >= 0:
            tally[s] += 1
        elif s == NOT_CONTRACTIVE:
            tally[-2] += 1
        else:
            tally[-1] += 1
    return tally


def _run_chunk_args(args):
    return _run_chunk(*args)


def mc_estimate(d: int, samples: int, seed: int, threads: int = 1, chunk_size: int = CHUNK_SIZE) -> McReport:
    """Estimate every v_d^(s) by uniform sampling of the coefficient box.

    ``threads`` is the number of worker processes (0 picks os.cpu_count()).
    """
    if d < 1:
        raise PreconditionError(f"degree must be >= 1, got {d}")
    if samples < 1:
        raise PreconditionError(f"samples must be >= 1, got {samples}")
    if not 0 <= seed < 1 << 64:
        raise PreconditionError(f"seed must be a 64-bit unsigned integer, got {seed}")
    jobs = []
    for k, start in enumerate(range(0, samples, chunk_size)):
        jobs.append((d, seed, k, min(chunk_size, samples - start)))
    workers = threads or os.cpu_count() or 1
    if workers == 1 or len(jobs) == 1:
        tallies = [_run_chunk(*job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
            tallies = list(pool.map(_run_chunk_args, jobs))
    total = [sum(col) for col in zip(*tallies)]
    box = box_volume(d)
    per_s = tuple(
        SignatureTally(
            s=s,
            hits=total[s],
            estimate=float(box) * total[s] / samples,
            stderr=_binomial_stderr(box, total[s], samples),
        )
        for s in range(d // 2 + 1)
    )
    return McReport(
        d=d,
        samples=samples,
        seed=seed,
        box_volume=box,
        per_s=per_s,
        misses=total[-2],
        degenerate_count=total[-1],
    )
