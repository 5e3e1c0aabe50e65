import pytest
from hypothesis import strategies as st

from monodefect import MonomialIdeal, RingContext

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


RINGS = {r: RingContext.standard(r) for r in range(1, 6)}


@st.composite
def ideals(draw, max_vars=3, max_exp=3, max_gens=4, allow_zero=False, num_vars=None):
    r = num_vars or draw(st.integers(1, max_vars))
    ring = RINGS[r]
    k = draw(st.integers(0 if allow_zero else 1, max_gens))
    rows = draw(st.lists(st.tuples(*[st.integers(0, max_exp)] * r), min_size=k, max_size=k))
    return MonomialIdeal(ring, rows) if rows else MonomialIdeal.zero(ring)


@st.composite
def ideal_pairs(draw, max_vars=3, max_exp=3, max_gens=4):
    r = draw(st.integers(1, max_vars))
    a = draw(ideals(max_exp=max_exp, max_gens=max_gens, num_vars=r, allow_zero=True))
    b = draw(ideals(max_exp=max_exp, max_gens=max_gens, num_vars=r, allow_zero=True))
    return a, b


@st.composite
def monomials(draw, ring, max_exp=6):
    return ring.monomial(*draw(st.tuples(*[st.integers(0, max_exp)] * ring.num_vars)))


@pytest.fixture
def r3():
    return RINGS[3]


@pytest.fixture
def triangle(r3):
    return r3.ideal("x1*x2, x2*x3, x3*x1")
