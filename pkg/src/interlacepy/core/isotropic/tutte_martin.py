"""Restricted and global Tutte-Martin polynomials of isotropic systems."""

from __future__ import annotations

from collections import Counter
from itertools import product

from ...errors import ResourceLimitError
from ..algebra.polynomial import IntPoly1
from .klein import NONZERO, KVector
from .system import IsotropicSystem

DEFAULT_ISOTROPIC_MAX_N = 12


def restricted_tm(system: IsotropicSystem, c: KVector, max_n: int = DEFAULT_ISOTROPIC_MAX_N) -> IntPoly1:
    """``tm(S, C; x) = sum (x-1)^{dim(L n X^)}`` over the ``2^n`` vectors
    ``X`` with ``X_v`` nonzero and different from ``C_v`` everywhere."""
    c.require_full("C")
    if system.n > max_n:
        raise ResourceLimitError("isotropic_max_n", max_n)
    options = [[k for k in NONZERO if k != cv] for cv in c.values]
    counts: Counter = Counter()
    for values in product(*options):
        counts[system.dim_meet_hat(KVector(system.labels, values))] += 1
    return IntPoly1.from_exponent_counts(counts, -1)


def global_tm(system: IsotropicSystem, max_n: int = DEFAULT_ISOTROPIC_MAX_N) -> IntPoly1:
    """``TM(S; x) = sum (x-2)^{dim(L n X^)}`` over all ``3^n`` vectors of
    ``(K')^V``."""
    if system.n > max_n:
        raise ResourceLimitError("isotropic_max_n", max_n)
    counts: Counter = Counter()
    for values in product(NONZERO, repeat=system.n):
        counts[system.dim_meet_hat(KVector(system.labels, values))] += 1
    return IntPoly1.from_exponent_counts(counts, -2)
