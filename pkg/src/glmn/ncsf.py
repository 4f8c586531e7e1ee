"""Noncommutative symmetric functions of a matrix and a distinguished index.

Two independent routes compute the same objects:

* :func:`ncsf_series` -- from quasideterminant generating series of 1 +- tA;
* :func:`ncsf_paths` -- by summing labelled cycles at the index in the
  complete oriented graph on the matrix indices.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from itertools import product

from .series import (
    SeriesMatrix,
    TruncSeries,
    quasideterminant,
    series_diff,
    series_invert,
    series_log,
)


class NcsfKind(enum.Enum):
    ELEMENTARY = "lambda"
    COMPLETE = "s"
    PSI = "psi"
    PHI = "phi"

    @classmethod
    def parse(cls, value) -> "NcsfKind":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown NCSF kind {value!r}; expected one of lambda, s, psi, phi") from None


def _check_index(A, i):
    if not 1 <= i <= len(A):
        raise IndexError(f"index {i} out of range 1..{len(A)}")


def ncsf_series(A, i: int, kind, K: int) -> TruncSeries:
    """Generating series of the requested family, truncated at t^K.

    For ELEMENTARY and COMPLETE the t^k coefficient is the degree-k function.
    For PSI and PHI the series is sum_k F_k t^{k-1}; its t^K coefficient is
    unavailable at this order and is returned as zero.
    """
    kind = NcsfKind.parse(kind)
    _check_index(A, i)
    if kind is NcsfKind.ELEMENTARY:
        return quasideterminant(SeriesMatrix.identity_plus_t(A, K, +1), i, i)
    q = quasideterminant(SeriesMatrix.identity_plus_t(A, K, -1), i, i)
    if kind is NcsfKind.COMPLETE:
        return series_invert(q)
    if kind is NcsfKind.PSI:
        return q * series_diff(series_invert(q))
    return -series_diff(series_log(q))


def ncsf_coefficient(A, i: int, kind, k: int):
    """The degree-k function of the family, read off its generating series."""
    kind = NcsfKind.parse(kind)
    if k < 1:
        raise ValueError("degree must be >= 1")
    s = ncsf_series(A, i, kind, k)
    if kind in (NcsfKind.PSI, NcsfKind.PHI):
        return s[k - 1]
    return s[k]


def iter_cycles(l: int, i: int, k: int):
    """All vertex sequences (i, r_1, ..., r_{k-1}, i) on vertices 1..l."""
    for interior in product(range(1, l + 1), repeat=k - 1):
        yield (i, *interior, i)


def path_weight(kind: NcsfKind, path: tuple) -> Fraction:
    """Coefficient with which a cycle's monomial enters the family.

    Returns are the positions s = 1..k where the path sits at its start
    vertex; the final vertex counts, the starting one does not.
    """
    i = path[0]
    k = len(path) - 1
    returns = [s for s in range(1, k + 1) if path[s] == i]
    if kind is NcsfKind.ELEMENTARY:
        return Fraction((-1) ** (k - 1)) if len(returns) == 1 else Fraction(0)
    if kind is NcsfKind.COMPLETE:
        return Fraction(1)
    if kind is NcsfKind.PSI:
        return Fraction(returns[0])
    return Fraction(k, len(returns))


def ncsf_paths(A, i: int, kind, k: int):
    """Degree-k function of the family as a weighted sum over cycles at i."""
    kind = NcsfKind.parse(kind)
    _check_index(A, i)
    if k < 1:
        raise ValueError("degree must be >= 1")
    l = len(A)
    total = A[0][0] * 0
    for path in iter_cycles(l, i, k):
        w = path_weight(kind, path)
        if not w:
            continue
        mono = A[path[0] - 1][path[1] - 1]
        for a, b in zip(path[1:-1], path[2:]):
            if not mono:
                break
            mono = mono * A[a - 1][b - 1]
        total = total + mono * w
    return total
