import random

import pytest
from hypothesis import strategies as st

from ffrec.polyalg import Poly, RationalFunction
from ffrec.recurrence import LinearRecurrence, Term


def random_poly(rng, max_deg=10, height=50, nonzero=True):
    while True:
        deg = rng.randint(0, max_deg)
        p = Poly([rng.randint(-height, height) for _ in range(deg + 1)])
        if p or not nonzero:
            return p


def random_rf(rng, max_deg=10, height=50):
    return RationalFunction(random_poly(rng, max_deg, height), random_poly(rng, max_deg, height))


def random_recurrence(rng, d_max=3, coeff_deg=2, root_deg=2, rational_roots=True):
    """Non-degenerate-or-not random power sum with distinct nonzero roots."""
    d = rng.randint(1, d_max)
    roots = []
    while len(roots) < d:
        num = random_poly(rng, root_deg, 5)
        den = random_poly(rng, root_deg if rational_roots else 0, 5)
        r = RationalFunction(num, den)
        if r not in roots:
            roots.append(r)
    terms = []
    for r in roots:
        k = rng.randint(0, coeff_deg)
        coeff = [RationalFunction(random_poly(rng, 2, 5), random_poly(rng, 1, 3)) for _ in range(k + 1)]
        if coeff[-1].is_zero():
            coeff[-1] = RationalFunction(1)
        terms.append(Term(coeff, r))
    return LinearRecurrence(terms)


@pytest.fixture
def rng():
    return random.Random(20261019)


small_ints = st.integers(min_value=-20, max_value=20)
fractions_st = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(fractions_st, min_size=0, max_size=6).map(Poly)
nonzero_polys = polys.filter(bool)
rational_functions = st.builds(RationalFunction, polys, nonzero_polys)
nonzero_rfs = st.builds(RationalFunction, nonzero_polys, nonzero_polys)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[number])
