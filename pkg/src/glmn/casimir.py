"""Quantum Berezinian, its quasideterminant factorization, and Casimir families."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .algebra import Element, Envelope, super_bracket
from .ncsf import NcsfKind, ncsf_coefficient, ncsf_series
from .series import SeriesMatrix, TruncSeries, matrix_invert, quasideterminant, series_invert


def ehat(U: Envelope) -> list[list[Element]]:
    """Super-matrix with entries (-1)^{parity(j)} E_ij."""
    N = U.dims.size
    return [[U.gen(i, j) * (-1) ** U.parity(j) for j in range(1, N + 1)] for i in range(1, N + 1)]


def leading_submatrix(U: Envelope, k: int, shift=0, sign: int = 1) -> list[list[Element]]:
    """sign * Ehat^{(k)} + shift * Identity, the leading k x k block."""
    if not 1 <= k <= U.dims.size:
        raise ValueError(f"submatrix size {k} out of range")
    E = ehat(U)
    return [[E[a][b] * sign + (shift if a == b else 0) for b in range(k)] for a in range(k)]


def ncsf_matrix(U: Envelope, idx: int) -> list[list[Element]]:
    """The matrix whose NCSF at index idx enter the Casimir families.

    Ehat^{(i)} - i + 1 for i <= m; -Ehat^{(m+j)} + m - j for idx = m + j.
    """
    m = U.m
    if idx <= m:
        return leading_submatrix(U, idx, shift=-idx + 1)
    j = idx - m
    return leading_submatrix(U, idx, shift=m - j, sign=-1)


def _one(U: Envelope, K: int) -> TruncSeries:
    return TruncSeries.constant(U.one(), K)


def _sgn(perm) -> int:
    sign = 1
    perm = list(perm)
    for a in range(len(perm)):
        for b in range(a + 1, len(perm)):
            if perm[a] > perm[b]:
                sign = -sign
    return sign


def _shifted_entry(E, a: int, b: int, shift, K: int, U: Envelope) -> TruncSeries:
    """Entry (a, b) of 1 + t(Ehat + shift), 1-based."""
    const = U.one() if a == b else U.zero()
    lin = E[a - 1][b - 1] + (shift if a == b else 0)
    return TruncSeries([const, lin], K)


def berezinian_direct(U: Envelope, K: int) -> TruncSeries:
    """B(t) from the double sum over S_m and S_n."""
    m, n = U.m, U.n
    N = m + n
    E = ehat(U)
    first = TruncSeries.constant(U.zero(), K)
    for sigma in permutations(range(1, m + 1)):
        term = _one(U, K)
        for s in range(1, m + 1):
            term = term * _shifted_entry(E, sigma[s - 1], s, -(s - 1), K, U)
        first = first + term * _sgn(sigma)

    inverses = []
    for s in range(1, n + 1):
        shift = -m + s
        M = SeriesMatrix(
            [[_shifted_entry(E, a, b, shift, K, U) for b in range(1, N + 1)] for a in range(1, N + 1)], K
        )
        inverses.append(matrix_invert(M))
    second = TruncSeries.constant(U.zero(), K)
    for tau in permutations(range(1, n + 1)):
        term = _one(U, K)
        for s in range(1, n + 1):
            term = term * inverses[s - 1][m + s - 1, m + tau[s - 1] - 1]
        second = second + term * _sgn(tau)
    return first * second


def berezinian_factors(U: Envelope, K: int) -> list[TruncSeries]:
    """The m + n quasideterminant factors, in product order."""
    m, n = U.m, U.n
    factors = []
    for i in range(1, m + 1):
        X = SeriesMatrix.identity_plus_t(leading_submatrix(U, i, shift=-i + 1), K)
        factors.append(quasideterminant(X, i, i))
    for j in range(1, n + 1):
        X = SeriesMatrix.identity_plus_t(leading_submatrix(U, m + j, shift=-m + j), K)
        factors.append(series_invert(quasideterminant(X, m + j, m + j)))
    return factors


def ordered_product(factors, U: Envelope, K: int) -> TruncSeries:
    out = _one(U, K)
    for f in factors:
        out = out * f
    return out


def berezinian_factored(U: Envelope, K: int) -> TruncSeries:
    return ordered_product(berezinian_factors(U, K), U, K)


def berezinian(U: Envelope, K: int, method: str = "direct") -> TruncSeries:
    if method == "direct":
        return berezinian_direct(U, K)
    if method == "factored":
        return berezinian_factored(U, K)
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class CasimirFamily:
    kind: NcsfKind
    degree: int
    value: Element


def _ncsf_product(U: Envelope, k: int, even_kind: NcsfKind, odd_kind: NcsfKind) -> Element:
    """t^k coefficient of prod_i F^{(i)}(t) with even_kind on the first block."""
    m, N = U.m, U.dims.size
    total = _one(U, k)
    for idx in range(1, N + 1):
        kind = even_kind if idx <= m else odd_kind
        total = total * ncsf_series(ncsf_matrix(U, idx), idx, kind, k)
    return total[k]


def casimir(U: Envelope, kind, k: int) -> CasimirFamily:
    kind = NcsfKind.parse(kind)
    if k < 1:
        raise ValueError("degree must be >= 1")
    m, N = U.m, U.dims.size
    if kind is NcsfKind.ELEMENTARY:
        value = _ncsf_product(U, k, NcsfKind.ELEMENTARY, NcsfKind.COMPLETE)
    elif kind is NcsfKind.COMPLETE:
        value = _ncsf_product(U, k, NcsfKind.COMPLETE, NcsfKind.ELEMENTARY)
    else:
        value = U.zero()
        for idx in range(1, N + 1):
            part = ncsf_coefficient(ncsf_matrix(U, idx), idx, kind, k)
            value = value + (part if idx <= m else part * (-1) ** (k - 1))
    return CasimirFamily(kind, k, value)


def check_central(U: Envelope, z: Element):
    """(True, None) if z super-commutes with every generator.

    Otherwise (False, ((i, j), remainder)) for the first failing generator
    in canonical generator order.
    """
    for i, j in U.generators:
        r = super_bracket(z, U.gen(i, j))
        if r:
            return False, ((i, j), r)
    return True, None
