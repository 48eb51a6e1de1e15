"""Exact volumes of the signature classes of the Schur-Cohn region."""

from .exact import PreconditionError, binomial, double_factorial, factorial, legendre_eval, trinomial
from .linalg import cauchy_alternant, cauchy_alternant_odd, det, ds_minor, hilbert_minor
from .volumes import (
    Signature,
    VolumeRecord,
    ratio,
    ratio_legendre_s1,
    total_ratio,
    v_full,
    v_mixed,
    v_real,
    v_real_det,
    v_totally_complex,
    volume_table,
)

__version__ = "0.1.0"
