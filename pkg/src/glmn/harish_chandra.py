"""Harish-Chandra images of central elements and supersymmetric polynomials."""

from __future__ import annotations

import enum
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from .algebra import Element, Envelope
from .polynomial import WeightPolynomial
from .series import TruncSeries, series_diff, series_invert, series_log

WEIGHT_NAMES = ("lambda", "mu")
SHIFTED_NAMES = ("x", "y")


class SusyKind(enum.Enum):
    E = "e"
    H = "h"
    P = "p"


def hc_project(U: Envelope, z: Element) -> WeightPolynomial:
    """Eigenvalue polynomial of z on the highest weight vector.

    Valid only for central z: monomials with any off-diagonal generator
    are dropped, E_ii becomes lambda_i and E_{m+j,m+j} becomes mu_j.
    """
    m, n = U.m, U.n
    terms: dict = {}
    for mono, c in z.terms.items():
        exps = [0] * (m + n)
        for g in mono:
            i, j = U.generators[g]
            if i != j:
                break
            exps[i - 1] += 1
        else:
            e = tuple(exps)
            terms[e] = terms.get(e, 0) + c
    return WeightPolynomial(m, n, terms, WEIGHT_NAMES)


def shift_to_xy(U: Envelope, p: WeightPolynomial) -> WeightPolynomial:
    """Rewrite in x_i = lambda_i - i + 1, y_j = mu_j + m - j."""
    m, n = U.m, U.n
    images = []
    for i in range(1, m + 1):
        images.append(WeightPolynomial.var(m, n, i - 1, SHIFTED_NAMES) + (i - 1))
    for j in range(1, n + 1):
        images.append(WeightPolynomial.var(m, n, m + j - 1, SHIFTED_NAMES) + (j - m))
    if not p.terms:
        return WeightPolynomial(m, n, {}, SHIFTED_NAMES)
    return p.substitute(images)


def hc_image(U: Envelope, z: Element, shifted: bool = True) -> WeightPolynomial:
    p = hc_project(U, z)
    return shift_to_xy(U, p) if shifted else p


def _monomial(m, n, xs, ys) -> WeightPolynomial:
    e = [0] * (m + n)
    for i in xs:
        e[i - 1] += 1
    for j in ys:
        e[m + j - 1] += 1
    return WeightPolynomial(m, n, {tuple(e): 1}, SHIFTED_NAMES)


def susy_oracle(U: Envelope, kind, k: int) -> WeightPolynomial:
    """e_k, h_k or p_k in x, y by enumerating the defining sums."""
    kind = SusyKind(kind) if not isinstance(kind, SusyKind) else kind
    m, n = U.m, U.n
    if k < 1:
        raise ValueError("degree must be >= 1")
    out = WeightPolynomial(m, n, {}, SHIFTED_NAMES)
    if kind is SusyKind.P:
        for i in range(1, m + 1):
            out = out + _monomial(m, n, [i] * k, [])
        for j in range(1, n + 1):
            out = out + _monomial(m, n, [], [j] * k) * (-1) ** (k - 1)
        return out
    x_strict = kind is SusyKind.E
    for p in range(k + 1):
        q = k - p
        xs_iter = combinations(range(1, m + 1), p) if x_strict else combinations_with_replacement(range(1, m + 1), p)
        xs_all = list(xs_iter)
        ys_iter = combinations_with_replacement(range(1, n + 1), q) if x_strict else combinations(range(1, n + 1), q)
        ys_all = list(ys_iter)
        for xs in xs_all:
            for ys in ys_all:
                out = out + _monomial(m, n, xs, ys)
    return out


def susy_series(U: Envelope, kind, K: int) -> TruncSeries:
    """e(t) = 1 + sum e_k t^k, h(t) likewise, p(t) = sum p_k t^{k-1}."""
    kind = SusyKind(kind) if not isinstance(kind, SusyKind) else kind
    one = WeightPolynomial.const(U.m, U.n, 1, SHIFTED_NAMES)
    if kind is SusyKind.P:
        coeffs = [susy_oracle(U, kind, k + 1) for k in range(K)] + [one * 0]
        return TruncSeries(coeffs, K)
    return TruncSeries([one] + [susy_oracle(U, kind, k) for k in range(1, K + 1)], K)


def hc_image_berezinian(U: Envelope, K: int) -> TruncSeries:
    """(1 + t x_1)...(1 + t x_m) / ((1 - t y_1)...(1 - t y_n)) expanded to t^K."""
    m, n = U.m, U.n
    one = WeightPolynomial.const(m, n, 1, SHIFTED_NAMES)
    out = TruncSeries.constant(one, K)
    for i in range(1, m + 1):
        out = out * TruncSeries([one, one.x(i)], K)
    for j in range(1, n + 1):
        out = out * series_invert(TruncSeries([one, -one.y(j)], K))
    return out


def hc_series(U: Envelope, s: TruncSeries, shifted: bool = True) -> TruncSeries:
    return TruncSeries([hc_image(U, c, shifted) for c in s.coeffs], s.order)


def check_supersymmetric(U: Envelope, p: WeightPolynomial) -> bool:
    m, n = p.m, p.n
    for a in range(m - 1):
        if p.swap(a, a + 1) != p:
            return False
    for b in range(m, m + n - 1):
        if p.swap(b, b + 1) != p:
            return False
    # x_m = z, y_n = -z must leave no z
    xm, yn = m - 1, m + n - 1
    groups: dict = {}
    for e, c in p.terms.items():
        rest = list(e)
        a, b = rest[xm], rest[yn]
        rest[xm] = rest[yn] = 0
        key = (tuple(rest), a + b)
        groups[key] = groups.get(key, 0) + c * (-1) ** b
    return all(c == 0 for (rest, zpow), c in groups.items() if zpow > 0)


def generating_relations(U: Envelope, K: int) -> dict[str, bool]:
    """h(t) e(-t) = 1, and both forms of p(t) in terms of e(-t)."""
    e = susy_series(U, SusyKind.E, K)
    h = susy_series(U, SusyKind.H, K)
    p = susy_series(U, SusyKind.P, K)
    e_neg = e.substitute_neg()
    one = TruncSeries.constant(e[0], K)
    p_log = -series_diff(series_log(e_neg))
    p_ratio = e_neg * series_diff(series_invert(e_neg))
    # top coefficient of p(t) sits beyond what a derivative at order K sees
    upto = K - 1
    return {
        "h(t)e(-t)=1": h * e_neg == one,
        "p(t)=-d/dt log e(-t)": p_log.coeffs[: upto + 1] == p.coeffs[: upto + 1],
        "p(t)=e(-t) d/dt e(-t)^-1": p_ratio.coeffs[: upto + 1] == p.coeffs[: upto + 1],
    }
