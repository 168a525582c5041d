import random
from fractions import Fraction

import pytest

from khovbasis import _kernels_py as py
from khovbasis import kernels

try:
    from khovbasis import _kernels as cy
except ImportError:  # extension not built
    cy = None

ROWS = ((1, 1, 1), (0, 0, -1), (0, -1, 0))


def rand_terms(rng, n=3, k=6, d=4):
    out = {}
    for _ in range(k):
        e = tuple(rng.randint(0, d) for _ in range(n))
        out[e] = Fraction(rng.randint(-5, 5) or 1, rng.randint(1, 3))
    return out


def test_backend_selected():
    assert kernels.BACKEND in ("cython", "python")


@pytest.mark.skipif(cy is None, reason="compiled kernels not built")
def test_backends_agree():
    rng = random.Random(7)
    for _ in range(50):
        a, b = rand_terms(rng), rand_terms(rng)
        assert cy.mul_terms(a, b) == py.mul_terms(a, b)
        shift = (1, 0, 2)
        assert cy.axpy_inplace(dict(a), b, Fraction(-2, 3), shift) == py.axpy_inplace(dict(a), b, Fraction(-2, 3), shift)
        assert cy.axpy_inplace(dict(a), b, Fraction(1), None) == py.axpy_inplace(dict(a), b, Fraction(1), None)
        assert cy.leading_exp(a, ROWS) == py.leading_exp(a, ROWS)
        e, f = next(iter(a)), next(iter(b))
        assert cy.order_key(ROWS, e) == py.order_key(ROWS, e)
        assert cy.divides(e, f) == py.divides(e, f)
        assert cy.mono_lcm(e, f) == py.mono_lcm(e, f)
        assert cy.coprime(e, f) == py.coprime(e, f)
        basis = []
        for t in (rand_terms(rng, k=3), rand_terms(rng, k=3)):
            lead = py.leading_exp(t, ROWS)
            c = t[lead]
            basis.append((lead, {k: v / c for k, v in t.items()}))
        assert cy.reduce_full(dict(a), basis, ROWS) == py.reduce_full(dict(a), basis, ROWS)


def test_reduce_full_remainder_irreducible():
    rng = random.Random(3)
    for _ in range(20):
        a = rand_terms(rng)
        t = rand_terms(rng, k=2)
        lead = py.leading_exp(t, ROWS)
        body = {k: v / t[lead] for k, v in t.items()}
        r = kernels.reduce_full(dict(a), [(lead, body)], ROWS)
        assert not any(kernels.divides(lead, e) for e in r)


def test_pure_python_fallback_runs_examples():
    import os
    import subprocess
    import sys
    code = (
        "from khovbasis import kernels\n"
        "from khovbasis.poly import PolyRing\n"
        "from khovbasis.grading import DeltaGrading, DeltaGroup\n"
        "from khovbasis.valuation import MonomialValuation\n"
        "from khovbasis.khovanskii import khovanskii_basis\n"
        "R = PolyRing(('x', 'y')); x, y = R.gens()\n"
        "run = khovanskii_basis([x**2 + y**2, x**2 - y**2, x*y], MonomialValuation.weight((1, 0)),\n"
        "                       DeltaGrading(DeltaGroup(1), ((2,), (2,), (2,))))\n"
        "print(kernels.BACKEND, len(run.basis), run.status)\n"
    )
    env = dict(os.environ, KHOVBASIS_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "4", "complete"]
