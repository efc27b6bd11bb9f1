import itertools
import random

import pytest
from hypothesis import strategies as st

from inc_hilbert.monomial import Monomial


def all_words(r, max_len):
    for n in range(max_len + 1):
        yield from itertools.product(range(r + 1), repeat=n)


@st.composite
def monomials(draw, rows=None, max_width=3, max_degree=4):
    r = draw(st.integers(1, 3)) if rows is None else rows
    deg = draw(st.integers(0, max_degree))
    exps = {}
    for _ in range(deg):
        key = (draw(st.integers(1, r)), draw(st.integers(0, max_width)))
        exps[key] = exps.get(key, 0) + 1
    return Monomial.from_dict(r, exps)


def random_monomial(rng, r, max_width=2, max_degree=3, min_degree=0):
    exps = {}
    for _ in range(rng.randint(min_degree, max_degree)):
        key = (rng.randint(1, r), rng.randint(0, max_width))
        exps[key] = exps.get(key, 0) + 1
    return Monomial.from_dict(r, exps)


def random_problem_gens(seed):
    """r <= 2, 1..3 generators of width <= 2 and degree 1..3."""
    rng = random.Random(seed)
    r = rng.randint(1, 2)
    gens = tuple(
        random_monomial(rng, r, min_degree=1) for _ in range(rng.randint(1, 3))
    )
    return r, gens


@pytest.fixture
def x10sq():
    return Monomial.var(1, 1, 0, 2)


ACCEPTANCE_RESULTS = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)
