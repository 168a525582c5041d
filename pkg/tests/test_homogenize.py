import logging
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from khovbasis.groebner import Ideal, ideal_quotient
from khovbasis.homogenize import (BayerPreconditionError, WeightSystem, dehomogenize, homogenize_ideal,
                                  homogenize_poly, initial_ideal, is_saturated, mindeg, multi_homogenize,
                                  multi_homogenize_poly)
from khovbasis.poly import PolyRing
from khovbasis.valuation import MonomialValuation
from conftest import R2, R3, polys, random_poly
from oracles import ideals_equal

T3 = PolyRing(("X1", "X2", "X3"))
X1, X2, X3 = T3.gens()
QUADRIC = X1**2 - 2 * X1 * X2 - X1 + X2**2 + X2 - X3


def test_mindeg_examples():
    assert mindeg((0, 0, 1), QUADRIC) == 0
    assert mindeg((1, 1, 1), X1 * X2 + X3**2) == 2
    assert mindeg((0, 0, 1), X3) == 1
    assert mindeg([(0, 0, 1), (1, 1, 1)], QUADRIC) == (0, 1)
    with pytest.raises(ValueError):
        mindeg((1, 1, 1), T3.zero())


def test_homogenize_poly_examples():
    h = homogenize_poly((0, 0, 1), -1, QUADRIC)
    t = h.ring.var("t")
    hX1, hX2, hX3 = h.ring.gens()[:3]
    assert h == hX1**2 - 2 * hX1 * hX2 - hX1 + hX2**2 + hX2 - hX3 * t
    g = X1 * X2 + X3**2
    assert homogenize_poly((1, 1, 1), -1, g) == g.to_ring(h.ring, [0, 1, 2])
    # (f g)^hom = f^hom g^hom for f = X1, g = X3 + X1
    w = (0, 0, 1)
    f1, f2 = X1, X3 + X1
    assert homogenize_poly(w, -1, f1 * f2) == homogenize_poly(w, -1, f1) * homogenize_poly(w, -1, f2)
    assert not homogenize_poly(w, -1, T3.zero())


def test_dehomogenize_examples():
    R = PolyRing(("X1", "X2", "X3", "X4", "t"))
    a, b, c, d, t = R.gens()
    out = dehomogenize(a - b - d * t, ["t"])
    assert str(out) == "X1 - X2 - X4"
    assert dehomogenize(t, [4]).is_constant()


@given(polys(R3, nonzero=True), st.lists(st.integers(-2, 3), min_size=3, max_size=3), st.sampled_from([1, -1]))
def test_round_trip_and_homogeneity(f, w, sign):
    h = homogenize_poly(w, sign, f)
    assert dehomogenize(h, ["t"]) == f
    full = list(w) + [sign]
    degs = {sum(a * b for a, b in zip(full, e)) for e in h.terms}
    assert degs == {mindeg(w, f) if sign < 0 else max(sum(a * b for a, b in zip(w, e)) for e in f.terms)}
    assert h.min_degree_in(3) == 0


@given(polys(R3, nonzero=True), st.lists(st.lists(st.integers(-2, 3), min_size=3, max_size=3), min_size=1, max_size=3))
def test_negative_equals_positive_of_negated(f, W):
    neg = multi_homogenize_poly(W, f, [-1] * len(W))
    pos = multi_homogenize_poly([[-a for a in r] for r in W], f, [1] * len(W))
    assert neg == pos


def test_homogenize_ideal_examples():
    H = homogenize_ideal(Ideal(T3, [QUADRIC]), (0, 0, 1))
    target = Ideal(H.ring, [homogenize_poly((0, 0, 1), -1, QUADRIC, ring=H.ring)])
    assert ideals_equal(H, target)
    T4 = PolyRing(("X1", "X2", "X3", "X4"))
    a, b, c, d = T4.gens()
    I = Ideal(T4, [a - b - d, c + d - d**2])
    for method in ("bayer", "saturation"):
        H = homogenize_ideal(I, (0, 0, 1, 1), -1, method)
        A, B, C, D, t = H.ring.gens()
        assert ideals_equal(H, Ideal(H.ring, [A - B - D * t, C + D - D**2 * t]))


def test_bayer_rejects_negative_weights():
    with pytest.raises(BayerPreconditionError):
        homogenize_ideal(Ideal(R2, [R2.var(0) + 1]), (-1, 1))
    H = homogenize_ideal(Ideal(R2, [R2.var(0) + 1]), (-1, 1), method="saturation")
    x, y, t = H.ring.gens()
    assert ideals_equal(H, Ideal(H.ring, [x + t]))


def test_zero_weight_is_trivial():
    I = Ideal(R2, [R2.var(0) ** 2 + R2.var(1)])
    H = homogenize_ideal(I, (0, 0))
    assert H.ring.nvars == 3 and len(H.gens) == 1


@settings(max_examples=25)
@given(st.integers(0, 10**6))
def test_bayer_matches_saturation(seed):
    rng = random.Random(seed)
    R = R2 if rng.random() < 0.5 else R3
    gens = [random_poly(rng, R, 3, 3, 3) for _ in range(rng.randint(1, 2))]
    w = [rng.randint(0, 2) for _ in range(R.nvars)]
    if not any(w):
        w[0] = 1
    I = Ideal(R, gens)
    Hb = homogenize_ideal(I, w, -1, "bayer")
    Hs = homogenize_ideal(I, w, -1, "saturation")
    assert ideals_equal(Hb, Hs)
    assert is_saturated(Hb, R.nvars)


def test_saturated_quotient():
    I = Ideal(T3, [QUADRIC, X1 * X3 - X2])
    H = homogenize_ideal(I, (1, 0, 2))
    assert ideals_equal(ideal_quotient(H, H.ring.var(3)), H)


def test_multi_homogenize_single_row():
    I = Ideal(T3, [QUADRIC])
    assert ideals_equal(multi_homogenize(I, [(0, 0, 1)]), homogenize_ideal(I, (0, 0, 1)))


def test_multi_homogenize_principal():
    f = X1**2 * X3 + X2 - X3**3
    W = [(0, 0, 1), (1, 2, 0)]
    H = multi_homogenize(Ideal(T3, [f]), W)
    g = multi_homogenize_poly(W, f, ring=H.ring)
    assert ideals_equal(H, Ideal(H.ring, [g]))


@settings(max_examples=10)
@given(st.integers(0, 10**6))
def test_multi_homogenize_row_order(seed):
    rng = random.Random(seed)
    gens = [random_poly(rng, R2, 3, 3, 2) for _ in range(2)]
    W = [[rng.randint(0, 2) for _ in range(2)] for _ in range(2)]
    for r in W:
        if not any(r):
            r[1] = 1
    I = Ideal(R2, gens)
    A = multi_homogenize(I, W)
    B = multi_homogenize(I, W[::-1])
    # B names its variables t1, t2 for the swapped rows; swap back
    swapped = Ideal(A.ring, [g.to_ring(A.ring, [0, 1, 3, 2]) for g in B.gens])
    assert ideals_equal(A, swapped)


def test_multi_homogenize_negative_row_warns(caplog):
    I = Ideal(R2, [R2.var(0) + R2.var(1) ** 2])
    with caplog.at_level(logging.WARNING):
        H = multi_homogenize(I, WeightSystem(((1, -1),)))
    assert "saturation" in caplog.text
    x, y, t = H.ring.gens()
    assert ideals_equal(H, Ideal(H.ring, [x * t**3 + y**2]))


def test_initial_ideal_examples():
    x, y = R2.gens()
    assert ideals_equal(initial_ideal(Ideal(R2, [x + y]), (0, 1)), Ideal(R2, [x]))
    I = Ideal(R2, [x**2 + y**2, x * y])
    assert ideals_equal(initial_ideal(I, (1, 1)), I)
    assert ideals_equal(initial_ideal(Ideal(T3, [QUADRIC]), (0, 0, 1)), Ideal(T3, [QUADRIC + X3]))


@given(polys(R2, nonzero=True, max_terms=5), st.lists(st.integers(0, 3), min_size=2, max_size=2))
def test_initial_ideal_principal(f, w):
    v = MonomialValuation.weight(w)
    assert ideals_equal(initial_ideal(Ideal(R2, [f]), w), Ideal(R2, [v.initial_form(f)]))


def test_raw_bayer_basis_only_generates_localization():
    x, y, z = R3.gens()
    I = Ideal(R3, [y * z, x * y * z - 2 * y])  # equals <y>
    raw = homogenize_ideal(I, (0, 2, 1), certify=False)
    fixed = homogenize_ideal(I, (0, 2, 1))
    _, Y, _, t = raw.ring.gens()
    assert not raw.contains(Y)
    assert ideals_equal(fixed, Ideal(fixed.ring, [Y]))
