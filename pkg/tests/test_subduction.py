import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from khovbasis.grading import DeltaGrading, DeltaGroup
from khovbasis.poly import PolyRing
from khovbasis.subduction import (InhomogeneousError, Status, TaggedAlgebra, check_conditions,
                                  homogeneous_preimage, subduct, tag_names)
from khovbasis.valuation import MonomialValuation
from conftest import R2, R3
from oracles import graded_instance, initial_algebra_contains

x, y = R2.gens()
V10 = MonomialValuation.weight((1, 0))
V01 = MonomialValuation.weight((0, 1))
SQUARES = [x**2 + y**2, x**2 - y**2, x * y]
TORSION = DeltaGrading(DeltaGroup(1, (2, 2)), ((2, 0, 0), (2, 1, 0), (2, 0, 1)))
STANDARD = DeltaGrading(DeltaGroup(1), ((2,), (2,), (2,)))
CHAIN = [x, x + y, y + y**2]


def test_tag_names_avoid_clashes():
    assert tag_names(3) == ("X1", "X2", "X3")
    assert "X1" not in tag_names(2, avoid=("X1",))


def test_preimage_torsion():
    alg = TaggedAlgebra(SQUARES, V10, TORSION)
    h = homogeneous_preimage((4 * x**2 * y**2, (4, 0, 0), V10.value(x**2 * y**2)), alg)
    X1, X2, X3 = alg.tags.gens()
    assert h == 4 * X3**2


def test_preimage_of_generator_initial():
    alg = TaggedAlgebra(SQUARES, V10, TORSION)
    h = alg.homogeneous_preimage(y**2, (2, 0, 0), V10.value(y**2))
    assert h == alg.tags.var(0)


def test_no_preimage_standard():
    alg = TaggedAlgebra(SQUARES, V10, STANDARD)
    assert alg.homogeneous_preimage(2 * x**2, (2,), V10.value(x**2)) is None


def test_subduct_torsion():
    f = SQUARES[0] ** 2 - SQUARES[1] ** 2
    assert f == 4 * x**2 * y**2
    res = subduct(f, SQUARES, V10, TORSION, delta=(4, 0, 0))
    assert res.status is Status.REDUCED_TO_ZERO
    X1, X2, X3 = res.h.ring.gens()
    assert res.h == 4 * X3**2
    assert res.used == [2]


def test_subduct_chain_runs_forever():
    res = subduct(-y, CHAIN, V01, DeltaGrading.trivial(3), max_iter=20)
    assert res.status is Status.ITERATION_CAP_HIT
    assert [g[0] for g in res.trail] == list(range(1, 22))
    conds = check_conditions(res, TaggedAlgebra(CHAIN, V01, DeltaGrading.trivial(3)))
    assert conds["(1) f = h(f_1..f_k) + r"] and conds["(2) terms of h"] and conds["(4) r homogeneous of deg(f)"]


def test_subduct_generator_itself():
    for i, f in enumerate(SQUARES):
        res = subduct(f, SQUARES, V10, TORSION)
        assert res.status is Status.REDUCED_TO_ZERO
        assert res.h == res.h.ring.var(i)
        assert res.delta == TORSION.degrees[i]


def test_subduct_zero():
    res = subduct(R2.zero(), SQUARES, V10, TORSION)
    assert res.status is Status.REDUCED_TO_ZERO and not res.h


def test_irreducible_remainder_standard():
    f4 = SQUARES[0] + SQUARES[1]
    res = subduct(f4, SQUARES, V10, STANDARD, delta=(2,))
    assert res.status is Status.IRREDUCIBLE_REMAINDER
    assert res.r == 2 * x**2
    assert all(check_conditions(res, TaggedAlgebra(SQUARES, V10, STANDARD)).values())


def test_infer_delta():
    alg = TaggedAlgebra(SQUARES, V10, TORSION)
    assert alg.infer_delta(SQUARES[2] ** 2) == (4, 0, 0)
    assert alg.infer_delta(SQUARES[1] * SQUARES[2]) == (4, 1, 1)
    with pytest.raises(InhomogeneousError):
        alg.infer_delta(x)  # not in the algebra
    with pytest.raises(InhomogeneousError):
        alg.infer_delta(SQUARES[0] + SQUARES[1])  # mixes (2,0,0) and (2,1,0)


def test_bad_cap():
    with pytest.raises(ValueError):
        subduct(x, CHAIN, V01, DeltaGrading.trivial(3), max_iter=0)


def _check_instance(seed):
    rng = random.Random(seed)
    ring = R2 if rng.random() < 0.5 else R3
    basis, v, grading, f, delta = graded_instance(rng, ring)
    alg = TaggedAlgebra(basis, v, grading)
    res = subduct(f, alg, delta=delta, max_iter=200)
    return ring, basis, v, alg, res


@settings(max_examples=40)
@given(st.integers(0, 10**9))
def test_contract_on_graded_inputs(seed):
    ring, basis, v, alg, res = _check_instance(seed)
    assert res.status is not Status.ITERATION_CAP_HIT
    assert all(check_conditions(res, alg).values())
    vals = res.trail
    assert all(v.gamma_compare(a, b) < 0 for a, b in zip(vals, vals[1:]))


@settings(max_examples=40)
@given(st.integers(0, 10**9))
def test_condition_five_brute_force(seed):
    ring, basis, v, alg, res = _check_instance(seed)
    if not res.r:
        return
    initials = [v.initial_form(b) for b in basis]
    degs = [sum(next(iter(b.terms))) for b in basis]
    assert not initial_algebra_contains(v.initial_form(res.r), initials, degs, res.delta[0])


@settings(max_examples=30)
@given(st.integers(0, 10**9))
def test_zero_remainder_gives_expression(seed):
    ring, basis, v, alg, res = _check_instance(seed)
    if res.status is Status.REDUCED_TO_ZERO:
        assert alg.evaluate(res.h) == res.f
