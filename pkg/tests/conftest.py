import sys
import random
from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from khovbasis.poly import Poly, PolyRing

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

R2 = PolyRing(("x", "y"))
R3 = PolyRing(("x", "y", "z"))


def _clip(e, max_deg):
    e = list(e)
    while sum(e) > max_deg:
        e[e.index(max(e))] -= 1
    return e


def exponents(n, max_deg):
    return st.lists(st.integers(0, max_deg), min_size=n, max_size=n).map(lambda e: _clip(e, max_deg))


def polys(ring, max_terms=4, max_deg=3, coeff=5, nonzero=False):
    term = st.tuples(st.integers(1, coeff) | st.integers(-coeff, -1), exponents(ring.nvars, max_deg))
    lo = 1 if nonzero else 0

    def build(terms):
        return ring.from_terms((c, tuple(e)) for c, e in terms)

    s = st.lists(term, min_size=lo, max_size=max_terms).map(build)
    return s.map(lambda f: f or ring.one()) if nonzero else s


def random_poly(rng: random.Random, ring, max_terms=3, max_deg=3, coeff=3, nonzero=True):
    while True:
        terms = []
        for _ in range(rng.randint(1, max_terms)):
            e = [0] * ring.nvars
            for _ in range(rng.randint(0, max_deg)):
                e[rng.randrange(ring.nvars)] += 1
            c = rng.randint(-coeff, coeff) or 1
            terms.append((Fraction(c), tuple(e)))
        f = ring.from_terms(terms)
        if f or not nonzero:
            return f


@pytest.fixture
def xy():
    return R2, R2.gens()


@pytest.fixture
def xyz():
    return R3, R3.gens()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
