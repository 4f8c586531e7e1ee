import json

import pytest

from glmn.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_casimir_psi1(capsys):
    code, out, _ = run(capsys, "casimir", "--m", "1", "--n", "1", "--family", "psi", "--k", "1")
    assert code == 0 and out == "1 * E[1,1] + 1 * E[2,2]\n"


def test_berezinian_order_zero(capsys):
    code, out, _ = run(capsys, "berezinian", "--m", "1", "--n", "1", "--order", "0")
    assert code == 0 and out == "1\n"


def test_hc_shifted(capsys):
    code, out, _ = run(capsys, "hc", "--m", "1", "--n", "1", "--family", "lambda", "--k", "2", "--shifted")
    assert out == "1 * x1*y1 + 1 * y1^2\n"
    code, out2, _ = run(capsys, "hc", "--m", "1", "--n", "1", "--of", "lambda:2", "--shifted")
    assert out2 == out


def test_hc_unshifted(capsys):
    code, out, _ = run(capsys, "hc", "--m", "2", "--n", "1", "--family", "psi", "--k", "1")
    assert out == "1 * lambda1 + 1 * lambda2 + 1 * mu1\n"


def test_berezinian_methods_agree(capsys):
    _, a, _ = run(capsys, "berezinian", "--m", "2", "--n", "1", "--order", "2", "--method", "direct")
    _, b, _ = run(capsys, "berezinian", "--m", "2", "--n", "1", "--order", "2", "--method", "factored")
    assert a == b


def test_json_schemas(capsys):
    _, out, _ = run(capsys, "casimir", "--m", "1", "--n", "1", "--family", "phi", "--k", "1", "--format", "json")
    assert json.loads(out) == {"terms": [
        {"coeff": "1", "monomial": [[1, 1, 1]]}, {"coeff": "1", "monomial": [[2, 2, 1]]}]}
    _, out, _ = run(capsys, "berezinian", "--m", "1", "--n", "1", "--order", "1", "--format", "json")
    d = json.loads(out)
    assert d["order"] == 1 and d["coeffs"][0] == {"terms": [{"coeff": "1", "monomial": []}]}


def test_ncsf_methods(capsys):
    args = ["ncsf", "--matrix", "ehat", "--m", "2", "--n", "1", "--i", "3", "--kind", "phi", "--k", "3"]
    _, a, _ = run(capsys, *args, "--method", "series")
    _, b, _ = run(capsys, *args, "--method", "paths")
    assert a == b and a.strip()
    _, c, _ = run(capsys, "ncsf", "--matrix", "formal", "--size", "2", "--i", "1", "--kind", "s", "--k", "2")
    assert c == "1 * A11*A11 + 1 * A12*A21\n"


@pytest.mark.parametrize("argv", [
    ["verify", "decomposition", "--m", "1", "--n", "1", "--order", "3"],
    ["verify", "centrality", "--m", "1", "--n", "1", "--order", "2"],
    ["verify", "psi-eq-phi", "--m", "2", "--n", "1", "--k", "2"],
])
def test_verify_examples(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.splitlines()[0].startswith("PASS")


@pytest.mark.parametrize("argv", [
    ["casimir", "--m", "0", "--n", "1", "--family", "psi", "--k", "1"],
    ["casimir", "--m", "1", "--n", "1", "--family", "nope", "--k", "1"],
    ["verify", "bogus"],
    ["verify", "centrality", "--m", "1"],
    ["ncsf", "--matrix", "ehat", "--i", "1", "--kind", "s", "--k", "1"],
    ["hc", "--m", "1", "--n", "1"],
    [],
])
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2
    assert capsys.readouterr().err


def test_verify_failure_exit_1(capsys, monkeypatch):
    from glmn import verify as V

    def broken(m, n, K):
        return [V.CheckResult("decomposition", "fake", False, "t^1: 1 * E[1,1]")]

    monkeypatch.setitem(V.CHECKS, "decomposition", broken)
    code, out, err = run(capsys, "verify", "decomposition", "--m", "1", "--n", "1")
    assert code == 1
    assert "FAIL decomposition fake" in out and "first counterexample" in err


def test_output_deterministic_across_threads(capsys):
    base = ["verify", "all", "--order", "2", "--trials", "10"]
    _, a, _ = run(capsys, *base, "--threads", "1")
    _, b, _ = run(capsys, *base, "--threads", "4")
    _, c, _ = run(capsys, *base, "--threads", "4")
    assert a == b == c
    assert "FAIL" not in a
