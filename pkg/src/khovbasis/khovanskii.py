"""Delta-homogeneous Khovanskii bases by repeated kernel computation and subduction."""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from .grading import TRIVIAL, DeltaDegree, DeltaGrading, DeltaGroup, GradedTagRing, homogeneous_components
from .groebner import DEFAULT_MAX_PAIRS, Ideal, RingMap, ideal_containment, kernel_of_map
from .homogenize import initial_ideal
from .poly import Poly
from .subduction import DEFAULT_MAX_ITER, Status, SubductionResult, TaggedAlgebra, subduct
from .valuation import MonomialValuation

log = logging.getLogger(__name__)


class RunStatus(str, enum.Enum):
    COMPLETE = "complete"
    ROUND_CAP_HIT = "round_cap_hit"

    def __str__(self):
        return self.value


def kernel_ideals(alg: TaggedAlgebra, initial: bool = True, max_pairs: int = DEFAULT_MAX_PAIRS) -> Ideal:
    """ker of X_i -> in_v(f_i) g^delta_i (``initial``) or X_i -> f_i g^delta_i."""
    amb = alg.ambient
    images = [amb.tagged(e.initial if initial else e.f, e.delta) for e in alg.entries]
    return kernel_of_map(RingMap(alg.tags, amb.ring, images, amb.relations), max_pairs)


def graded_tag_ring(alg: TaggedAlgebra) -> GradedTagRing:
    v = alg.v
    return GradedTagRing(alg.tags, alg.group, [e.delta for e in alg.entries],
                         [e.value for e in alg.entries], v.gamma_key)


def kernel_components(alg: TaggedAlgebra, J: Ideal) -> List[Poly]:
    """Split the reduced Groebner basis of J into (Gamma, Delta)-homogeneous pieces."""
    gr = graded_tag_ring(alg)
    out = []
    for g in J.groebner_basis():
        for c in homogeneous_components(gr, g, "both"):
            if c not in out:
                out.append(c)
    return out


def normalized(f: Poly) -> Poly:
    return f.content_normalized()


@dataclass
class RoundLog:
    kernel: List[Poly]
    components: List[Poly]
    added: List[Poly] = field(default_factory=list)
    deferred: List[Poly] = field(default_factory=list)


@dataclass
class KhovanskiiRun:
    basis: List[Poly]
    degrees: List[DeltaDegree]
    rounds: int
    status: RunStatus
    log: List[RoundLog] = field(default_factory=list)
    group: DeltaGroup = TRIVIAL

    @property
    def grading(self) -> DeltaGrading:
        return DeltaGrading(self.group, tuple(self.degrees))


def khovanskii_basis(gens: Sequence[Poly], v: MonomialValuation, grading: DeltaGrading,
                     round_cap: int = 20, subduction_cap: int = DEFAULT_MAX_ITER,
                     normalize: bool = True, max_pairs: int = DEFAULT_MAX_PAIRS) -> KhovanskiiRun:
    """Grow ``gens`` until every homogeneous relation among initial forms subducts to zero.

    A round computes J = ker(beta), splits its generators into homogeneous
    components, subducts each evaluated component and adds the nonzero
    remainders.  Stops when a round adds nothing (complete) or after
    ``round_cap`` rounds.
    """
    gens = list(gens)
    if not gens or any(not g for g in gens):
        raise ValueError("generators must be a nonempty list of nonzero polynomials")
    if len(grading.degrees) != len(gens):
        raise ValueError("one Delta-degree per generator required")
    basis = list(gens)
    degrees = list(grading.degrees)
    logs: List[RoundLog] = []
    stalled = 0
    rounds = 0
    while rounds < round_cap:
        rounds += 1
        alg = TaggedAlgebra(basis, v, DeltaGrading(grading.group, degrees), max_pairs)
        J = kernel_ideals(alg, True, max_pairs)
        comps = kernel_components(alg, J)
        rl = RoundLog(list(J.groebner_basis()), comps)
        logs.append(rl)
        new, new_deg = [], []
        for h in comps:
            d = alg.delta_of(next(iter(h._terms)))
            res = subduct(alg.evaluate(h), alg, max_iter=subduction_cap, delta=d)
            if res.status is Status.ITERATION_CAP_HIT:
                log.info("subduction cap hit on %s; deferred", h)
                rl.deferred.append(h)
                continue
            if res.status is Status.REDUCED_TO_ZERO:
                continue
            r = normalized(res.r) if normalize else res.r
            # skip remainders whose initial form is already covered by this round's additions
            if new:
                probe = TaggedAlgebra(basis + new, v, DeltaGrading(grading.group, degrees + new_deg), max_pairs)
                if probe.homogeneous_preimage(v.initial_form(r), d, v.value(r)) is not None:
                    continue
            new.append(r)
            new_deg.append(d)
        rl.added = list(new)
        if not new and not rl.deferred:
            return KhovanskiiRun(basis, degrees, rounds, RunStatus.COMPLETE, logs, grading.group)
        if not new:
            stalled += 1
            if stalled >= 2:
                break
        else:
            stalled = 0
        basis += new
        degrees += new_deg
    return KhovanskiiRun(basis, degrees, rounds, RunStatus.ROUND_CAP_HIT, logs, grading.group)


@dataclass
class KhovanskiiCertificate:
    verdict: Optional[bool]  # None means inconclusive
    kernel: List[Poly]
    subductions: List[SubductionResult]
    witness: Optional[Poly] = None
    ideal_check: Optional[bool] = None

    def __bool__(self):
        return bool(self.verdict)


def verify_khovanskii(basis: Sequence[Poly], v: MonomialValuation, grading: DeltaGrading,
                      subduction_cap: int = DEFAULT_MAX_ITER, check_ideals: bool = True,
                      max_pairs: int = DEFAULT_MAX_PAIRS) -> KhovanskiiCertificate:
    """Every homogeneous kernel generator must subduct to zero.

    For integer-valued valuations the ideal of initial forms of ker(alpha) is
    also compared with ker(beta) by double containment (``ideal_check``).
    """
    alg = TaggedAlgebra(basis, v, grading, max_pairs)
    J = kernel_ideals(alg, True, max_pairs)
    comps = kernel_components(alg, J)
    subs = []
    verdict: Optional[bool] = True
    witness = None
    for h in comps:
        d = alg.delta_of(next(iter(h._terms)))
        res = subduct(alg.evaluate(h), alg, max_iter=subduction_cap, delta=d)
        subs.append(res)
        if res.status is Status.IRREDUCIBLE_REMAINDER:
            verdict = False
            witness = witness or res.r
        elif res.status is Status.ITERATION_CAP_HIT and verdict is not False:
            verdict = None
    ideal_check = None
    if check_ideals and v.is_integral:
        I = kernel_ideals(alg, False, max_pairs)
        w = [e.value[0] for e in alg.entries]
        inI = initial_ideal(I, w, max_pairs=max_pairs)
        ideal_check = ideal_containment(inI, J)[0] and ideal_containment(J, inI)[0]
        if verdict is True and not ideal_check:
            raise AssertionError("subduction verdict and initial-ideal check disagree")
    return KhovanskiiCertificate(verdict, list(J.groebner_basis()), subs, witness, ideal_check)
