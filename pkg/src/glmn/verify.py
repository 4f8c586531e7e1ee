"""Mechanical checks of the factorization, centrality and Harish-Chandra images.

Every check returns a list of :class:`CheckResult`, one per grid cell, in a
fixed order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Element, Envelope, formal_matrix, renormalize, super_bracket
from .casimir import (
    berezinian_direct,
    berezinian_factored,
    berezinian_factors,
    casimir,
    check_central,
    ncsf_matrix,
    ordered_product,
)
from .harish_chandra import (
    SusyKind,
    check_supersymmetric,
    generating_relations,
    hc_image,
    hc_image_berezinian,
    hc_series,
    susy_oracle,
)
from .ncsf import NcsfKind, ncsf_coefficient, ncsf_paths

DEFAULT_GRID = ((1, 1), (2, 1), (1, 2), (2, 2))
HC_TARGET = {
    NcsfKind.ELEMENTARY: SusyKind.E,
    NcsfKind.COMPLETE: SusyKind.H,
    NcsfKind.PSI: SusyKind.P,
    NcsfKind.PHI: SusyKind.P,
}


@dataclass
class CheckResult:
    check: str
    cell: str
    passed: bool
    detail: str = ""
    elements: list = field(default_factory=list, repr=False)

    def line(self) -> str:
        s = f"{'PASS' if self.passed else 'FAIL'} {self.check} {self.cell}"
        return s if self.passed or not self.detail else f"{s}: {self.detail}"


def _first_series_diff(a, b):
    for k, (x, y) in enumerate(zip(a.coeffs, b.coeffs)):
        if x != y:
            return f"t^{k}: {x - y}"
    return ""


def check_decomposition(m: int, n: int, K: int) -> list[CheckResult]:
    U = Envelope(m, n)
    direct = berezinian_direct(U, K)
    factored = berezinian_factored(U, K)
    ok = direct == factored
    return [
        CheckResult(
            "decomposition", f"m={m} n={n} K={K}", ok,
            "" if ok else "direct - factored at " + _first_series_diff(direct, factored),
            list(direct.coeffs) + list(factored.coeffs),
        )
    ]


def check_permutability(m: int, n: int, K: int) -> list[CheckResult]:
    U = Envelope(m, n)
    factors = berezinian_factors(U, K)
    base = ordered_product(factors, U, K)
    out = []
    for a in range(len(factors) - 1):
        swapped = list(factors)
        swapped[a], swapped[a + 1] = swapped[a + 1], swapped[a]
        prod = ordered_product(swapped, U, K)
        ok = prod == base
        out.append(
            CheckResult(
                "permutability", f"m={m} n={n} K={K} swap={a + 1},{a + 2}", ok,
                "" if ok else _first_series_diff(prod, base),
            )
        )
    return out


def _central_result(U, name, cell, z) -> CheckResult:
    ok, witness = check_central(U, z)
    detail = ""
    if not ok:
        (i, j), rem = witness
        detail = f"[z, E[{i},{j}]] = {rem}"
    return CheckResult(name, cell, ok, detail, [z])


def check_centrality(m: int, n: int, K: int) -> list[CheckResult]:
    U = Envelope(m, n)
    out = []
    B = berezinian_direct(U, K)
    for k in range(1, K + 1):
        out.append(_central_result(U, "centrality", f"m={m} n={n} B_t^{k}", B[k]))
    for kind in NcsfKind:
        for k in range(1, K + 1):
            z = casimir(U, kind, k).value
            out.append(_central_result(U, "centrality", f"m={m} n={n} {kind.value}_{k}", z))
    return out


def check_psi_eq_phi(m: int, n: int, K: int) -> list[CheckResult]:
    U = Envelope(m, n)
    out = []
    for k in range(1, K + 1):
        psi = casimir(U, NcsfKind.PSI, k).value
        phi = casimir(U, NcsfKind.PHI, k).value
        ok = psi == phi
        out.append(
            CheckResult("psi-eq-phi", f"m={m} n={n} k={k}", ok, "" if ok else f"psi - phi = {psi - phi}", [psi, phi])
        )
    return out


def check_hc_images(m: int, n: int, K: int) -> list[CheckResult]:
    U = Envelope(m, n)
    out = []
    for kind in NcsfKind:
        for k in range(1, K + 1):
            z = casimir(U, kind, k).value
            img = hc_image(U, z)
            want = susy_oracle(U, HC_TARGET[kind], k)
            ok = img == want
            susy = check_supersymmetric(U, img)
            detail = ""
            if not ok:
                detail = f"image - {HC_TARGET[kind].value}_{k} = {img - want}"
            elif not susy:
                detail = f"image not supersymmetric: {img}"
            out.append(
                CheckResult("hc-images", f"m={m} n={n} {kind.value}_{k}", ok and susy, detail, [z])
            )
    B = berezinian_direct(U, K)
    img = hc_series(U, B)
    want = hc_image_berezinian(U, K)
    ok = img == want
    out.append(
        CheckResult("hc-images", f"m={m} n={n} B(t) K={K}", ok, "" if ok else _first_series_diff(img, want))
    )
    return out


def _paths_vs_series(A, label, K) -> list[CheckResult]:
    out = []
    l = len(A)
    for i in range(1, l + 1):
        for kind in NcsfKind:
            bad = ""
            for k in range(1, K + 1):
                a = ncsf_coefficient(A, i, kind, k)
                b = ncsf_paths(A, i, kind, k)
                if a != b:
                    bad = f"k={k}: series - paths = {a - b}"
                    break
            out.append(CheckResult("series-vs-paths", f"{label} i={i} {kind.value} K={K}", not bad, bad))
    return out


def check_series_vs_paths(m: int, n: int, K: int) -> list[CheckResult]:
    U = Envelope(m, n)
    out = []
    for idx in range(1, U.dims.size + 1):
        A = ncsf_matrix(U, idx)
        for kind in NcsfKind:
            bad = ""
            for k in range(1, K + 1):
                a = ncsf_coefficient(A, idx, kind, k)
                b = ncsf_paths(A, idx, kind, k)
                if a != b:
                    bad = f"k={k}: series - paths = {a - b}"
                    break
            out.append(
                CheckResult("series-vs-paths", f"m={m} n={n} ehat index={idx} {kind.value} K={K}", not bad, bad)
            )
    return out


def check_formal_series_vs_paths(K: int, sizes=(2, 3)) -> list[CheckResult]:
    out = []
    for l in sizes:
        out.extend(_paths_vs_series(formal_matrix(l), f"formal {l}x{l}", K))
    return out


def check_generating_relations(m: int, n: int, K: int) -> list[CheckResult]:
    U = Envelope(m, n)
    return [
        CheckResult("generating-relations", f"m={m} n={n} K={K} {name}", ok)
        for name, ok in generating_relations(U, K).items()
    ]


def example_psi(U: Envelope, k: int) -> Element:
    """Psi_1 and Psi_2 written out generator by generator."""
    m, n = U.m, U.n
    E = U.gen
    total = U.zero()
    if k == 1:
        for i in range(1, m + 1):
            total = total + E(i, i) - (i - 1)
        for j in range(1, n + 1):
            total = total + E(m + j, m + j) + (m - j)
        return total
    if k == 2:
        for i in range(1, m + 1):
            d = E(i, i) - (i - 1)
            total = total + d * d
            for l in range(1, i):
                total = total + E(i, l) * E(l, i) * 2
        for j in range(1, n + 1):
            d = E(m + j, m + j) + (m - j)
            part = d * d
            for l in range(1, m + j):
                part = part - E(m + j, l) * E(l, m + j) * (2 * (-1) ** U.parity(l))
            total = total - part
        return total
    raise ValueError("closed forms are only known for k = 1, 2")


def check_example_psi(m: int, n: int) -> list[CheckResult]:
    U = Envelope(m, n)
    out = []
    for k in (1, 2):
        got = casimir(U, NcsfKind.PSI, k).value
        want = example_psi(U, k)
        ok = got == want
        out.append(
            CheckResult("example-psi", f"m={m} n={n} psi_{k}", ok, "" if ok else f"computed - printed = {got - want}")
        )
    return out


# ---- kernel properties on random data ----

def random_element(U: Envelope, rng: random.Random, max_terms: int = 3, max_degree: int = 2) -> Element:
    z = U.zero()
    for _ in range(rng.randint(1, max_terms)):
        word = [rng.choice(U.generators) for _ in range(rng.randint(0, max_degree))]
        c = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
        z = z + U.normal_order(word) * c
    return z


def _graded_bracket_gens(U, x, y):
    return super_bracket(U.gen(*x), U.gen(*y))


def check_kernel_properties(m: int, n: int, trials: int = 100, seed: int = 0) -> list[CheckResult]:
    U = Envelope(m, n)
    rng = random.Random(seed * 1000 + 10 * m + n)
    one = U.one()
    fails = {"associativity": "", "unit": "", "antisymmetry": "", "jacobi": "", "confluence": ""}
    for t in range(trials):
        a, b, c = (random_element(U, rng) for _ in range(3))
        if not fails["associativity"] and (a * b) * c != a * (b * c):
            fails["associativity"] = f"trial {t}: a={a}, b={b}, c={c}"
        if not fails["unit"] and not (one * a == a == a * one):
            fails["unit"] = f"trial {t}: a={a}"
        x, y, z = (rng.choice(U.generators) for _ in range(3))
        px, py = U.generator_parity(*x), U.generator_parity(*y)
        lhs = U.gen(*x) * U.gen(*y) - U.gen(*y) * U.gen(*x) * (-1) ** (px * py)
        if not fails["antisymmetry"] and lhs != U.bracket(x, y):
            fails["antisymmetry"] = f"trial {t}: E{x}, E{y}"
        X, Y, Z = U.gen(*x), U.gen(*y), U.gen(*z)
        jac_l = super_bracket(X, super_bracket(Y, Z))
        jac_r = super_bracket(super_bracket(X, Y), Z) + super_bracket(Y, super_bracket(X, Z)) * (-1) ** (px * py)
        if not fails["jacobi"] and jac_l != jac_r:
            fails["jacobi"] = f"trial {t}: E{x}, E{y}, E{z}"
        word = [rng.choice(U.generators) for _ in range(rng.randint(2, 4))]
        s = rng.randrange(len(word) - 1)
        u, v = word[s], word[s + 1]
        sign = (-1) ** (U.generator_parity(*u) * U.generator_parity(*v))
        rewritten = (
            U.normal_order(word[:s] + [v, u] + word[s + 2:]) * sign
            + U.normal_order(word[:s]) * U.bracket(u, v) * U.normal_order(word[s + 2:])
        )
        if not fails["confluence"] and U.normal_order(word) != rewritten:
            fails["confluence"] = f"trial {t}: word {word}"
    return [
        CheckResult("kernel", f"m={m} n={n} {name} trials={trials}", not detail, detail)
        for name, detail in fails.items()
    ]


def check_idempotence(results: list[CheckResult]) -> CheckResult:
    """Straightening an already canonical element must return it unchanged."""
    count = 0
    for r in results:
        for z in r.elements:
            if isinstance(z, Element) and isinstance(z.parent, Envelope):
                count += 1
                if renormalize(z) != z:
                    return CheckResult("idempotence", f"{r.check} {r.cell}", False, f"element {z}")
    return CheckResult("idempotence", f"elements={count}", True)


CHECKS = {
    "centrality": check_centrality,
    "decomposition": check_decomposition,
    "permutability": check_permutability,
    "psi-eq-phi": check_psi_eq_phi,
    "hc-images": check_hc_images,
    "series-vs-paths": check_series_vs_paths,
}
