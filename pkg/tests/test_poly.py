from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from khovbasis.poly import Poly, PolyRing, RingMismatchError, arith, format_poly, substitute, support
from conftest import R2, R3, polys

x, y = R2.gens()


def test_arith_examples():
    assert arith("add", x + y, -y) == x
    assert arith("mul", x + y, x - y) == x**2 - y**2
    assert arith("sub", x**2 + y**2, x**2 - y**2) == 2 * y**2
    assert arith("neg", x) == -x


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        x + R3.var("x")


def test_zero_coefficients_stripped():
    f = (x + y) - y
    assert list(f.terms) == [(1, 0)]


def test_substitute_examples():
    T = PolyRing(("X1", "X2", "X3", "X4"))
    X1, X2, X3, X4 = T.gens()
    f = [x**2 + y**2, x**2 - y**2, x * y, 2 * x**2]
    assert substitute(X1**2 - X2**2, f) == 4 * x**2 * y**2
    assert substitute(Fraction(1, 2) * X4**2, f) == 2 * x**4
    assert substitute(PolyRing(("X1",)).var(0), [x + y]) == x + y


def test_substitute_length_mismatch():
    with pytest.raises(ValueError):
        substitute(PolyRing(("X1", "X2")).var(0), [x])


def test_support_examples():
    assert support(x**2 + 2 * y) == [(1, (2, 0)), (2, (0, 1))]
    assert support(R2.zero()) == []
    assert len(support(sum(R3.gens(), R3.zero()))) == 3


def test_format():
    assert format_poly(x**2 + 2 * y - Fraction(1, 3)) == "x^2 + 2*y - 1/3"
    assert format_poly(Fraction(1, 3) * x) == "1/3*x"
    assert format_poly(R2.zero()) == "0"


@given(polys(R2), polys(R2), polys(R2))
def test_ring_laws(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f * R2.zero() == R2.zero()
    assert f + (-f) == R2.zero()
    assert f * g == g * f


@given(polys(PolyRing(("X1", "X2")), max_deg=2), polys(PolyRing(("X1", "X2")), max_deg=2),
       polys(R2, max_deg=2), polys(R2, max_deg=2))
def test_substitute_is_morphism(h1, h2, a, b):
    imgs = [a, b]
    assert substitute(h1 * h2, imgs) == substitute(h1, imgs) * substitute(h2, imgs)
    assert substitute(h1 + h2, imgs) == substitute(h1, imgs) + substitute(h2, imgs)


@given(polys(R3))
def test_support_rebuilds(f):
    s = support(f)
    assert all(c != 0 for c, _ in s)
    assert R3.from_terms(s) == f


@given(polys(R3))
def test_hash_consistent(f):
    g = R3.from_terms(support(f))
    assert hash(f) == hash(g)


def test_content_normalized():
    f = Fraction(-2, 3) * x**2 + Fraction(4, 3) * y
    assert f.content_normalized() == x**2 - 2 * y
    assert (-y).content_normalized() == y
