import pytest
from hypothesis import strategies as st

from borelreg.monomials import Monomial, MonomialIdeal, RingContext

ACCEPTANCE_LINES = []


def mono(*exps):
    return Monomial(exps)


def ideal(n, *gens):
    return MonomialIdeal(RingContext(n), gens)


@st.composite
def monomials(draw, n, max_exp=3):
    return Monomial(draw(st.lists(st.integers(0, max_exp), min_size=n, max_size=n)))


@st.composite
def ideals(draw, n=None, max_exp=3, max_gens=4, proper=True):
    if n is None:
        n = draw(st.integers(1, 3))
    gens = draw(st.lists(monomials(n, max_exp), min_size=1, max_size=max_gens))
    if proper:
        gens = [g for g in gens if any(g)] or [Monomial((1,) + (0,) * (n - 1))]
    return MonomialIdeal(RingContext(n), gens)


@pytest.fixture
def acceptance_log():
    def log(number, title, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}"
        if detail:
            line += f"  ({detail})"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok
    return log


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
