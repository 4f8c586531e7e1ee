import pytest

from glmn import (
    Envelope, NcsfKind, berezinian_direct, berezinian_factored, berezinian_factors,
    casimir, check_central, ehat,
)
from glmn.casimir import ordered_product
from glmn.series import TruncSeries
from glmn.verify import example_psi

from conftest import DIMS


def test_ehat_signs():
    U = Envelope(2, 1)
    E = ehat(U)
    assert E[0][2] == -U.gen(1, 3)
    assert E[2][0] == U.gen(3, 1)
    assert E[2][2] == -U.gen(3, 3)


def test_berezinian_gl11(gl11):
    E = gl11.gen
    B1 = berezinian_direct(gl11, 1)
    assert B1 == TruncSeries([gl11.one(), E(1, 1) + E(2, 2)], 1)
    B2 = berezinian_direct(gl11, 2)
    assert B2[2] == E(1, 1) * E(2, 2) + E(2, 2) * E(2, 2) - E(2, 1) * E(1, 2)
    assert berezinian_factored(gl11, 2) == B2


@pytest.mark.parametrize("m,n", DIMS)
def test_order_zero(m, n):
    U = Envelope(m, n)
    assert berezinian_direct(U, 0) == TruncSeries([U.one()], 0)
    assert berezinian_factored(U, 0) == TruncSeries([U.one()], 0)


def test_first_factor_is_1x1(gl21):
    f = berezinian_factors(gl21, 3)[0]
    assert f == TruncSeries([gl21.one(), gl21.gen(1, 1)], 3)


@pytest.mark.parametrize("m,n", [(2, 1), (1, 2)])
def test_factorization_and_permutability(m, n):
    U = Envelope(m, n)
    K = 3
    assert berezinian_direct(U, K) == berezinian_factored(U, K)
    fs = berezinian_factors(U, K)
    base = ordered_product(fs, U, K)
    for a in range(len(fs)):
        for b in range(a + 1, len(fs)):
            assert fs[a] * fs[b] == fs[b] * fs[a]
    assert ordered_product(list(reversed(fs)), U, K) == base


def test_check_central_examples(gl11):
    E = gl11.gen
    assert check_central(gl11, E(1, 1) + E(2, 2)) == (True, None)
    ok, (gen, rem) = check_central(gl11, E(1, 1))
    assert not ok and gen == (2, 1)  # first generator in canonical order
    assert rem == -gl11.gen(2, 1)
    assert check_central(gl11, gl11.one())[0]
    ok, (gen, rem) = check_central(gl11, E(1, 1) + E(2, 2) * 2)
    assert not ok and rem


def test_casimir_gl11_first_degree(gl11):
    E = gl11.gen
    assert casimir(gl11, "psi", 1).value == E(1, 1) + E(2, 2)
    assert casimir(gl11, "lambda", 1).value == E(1, 1) + E(2, 2)


@pytest.mark.parametrize("m,n", DIMS)
@pytest.mark.parametrize("k", [1, 2])
def test_example_closed_forms(m, n, k):
    U = Envelope(m, n)
    assert casimir(U, NcsfKind.PSI, k).value == example_psi(U, k)


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2)])
def test_lambda_generating_identity_and_centrality(m, n):
    U = Envelope(m, n)
    K = 3
    B = berezinian_direct(U, K)
    for k in range(1, K + 1):
        lam = casimir(U, NcsfKind.ELEMENTARY, k).value
        assert lam == B[k]
        for kind in NcsfKind:
            z = casimir(U, kind, k).value
            assert check_central(U, z)[0]
            assert all(U.element_parity(mono) == 0 for mono in z.terms)


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2)])
def test_psi_equals_phi(m, n):
    U = Envelope(m, n)
    for k in range(1, 4):
        assert casimir(U, "psi", k).value == casimir(U, "phi", k).value
