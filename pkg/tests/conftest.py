from fractions import Fraction

import pytest
from hypothesis import strategies as st

from glmn import Envelope

DIMS = [(1, 1), (2, 1), (1, 2), (2, 2)]


@pytest.fixture(scope="module")
def gl11():
    return Envelope(1, 1)


@pytest.fixture(scope="module")
def gl21():
    return Envelope(2, 1)


def elements(U, max_terms=3, max_degree=2):
    """Hypothesis strategy for small random elements of U."""
    word = st.lists(st.sampled_from(U.generators), max_size=max_degree)
    coeff = st.fractions(min_value=-3, max_value=3, max_denominator=3)
    terms = st.lists(st.tuples(coeff, word), min_size=1, max_size=max_terms)
    return terms.map(lambda ts: sum((U.normal_order(w) * c for c, w in ts), U.zero()))


def F(p, q=1):
    return Fraction(p, q)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
