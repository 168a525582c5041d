"""Bases representing every homogeneous element faithfully for several Z-valuations at once."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .grading import TRIVIAL, DeltaDegree, DeltaGrading, DeltaGroup
from .groebner import DEFAULT_MAX_PAIRS, Ideal, ideal_containment
from .homogenize import WeightSystem, dehomogenize, multi_homogenize, multi_homogenize_poly
from .khovanskii import RunStatus, kernel_ideals, normalized
from .poly import Poly, PolyRing
from .subduction import AmbientRing, InhomogeneousError, Membership, NotInSubalgebraError, TaggedAlgebra
from .valuation import MonomialValuation

log = logging.getLogger(__name__)


def _check_valuations(valuations: Sequence[MonomialValuation]):
    if not valuations:
        raise ValueError("at least one valuation required")
    for v in valuations:
        if not v.is_integral:
            raise ValueError(f"valuation {v} is not integer-valued")


def weight_matrix(basis: Sequence[Poly], valuations: Sequence[MonomialValuation]) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(v.scalar(f) for f in basis) for v in valuations)


def t_names(m: int, avoid: Sequence[str]) -> Tuple[str, ...]:
    from .groebner import _unique_names
    return _unique_names(avoid, ("t",) if m == 1 else tuple(f"t{i + 1}" for i in range(m)))


@dataclass
class MuvakIdeals:
    W: Tuple[Tuple[int, ...], ...]
    I: Ideal
    J: List[Ideal]
    I_hom: Ideal
    J_hom: List[Ideal]

    @property
    def ring(self) -> PolyRing:
        return self.I_hom.ring

    def t_index(self, i: int) -> int:
        return self.ring.nvars - len(self.J) + i

    def offenders(self, i: int) -> List[Poly]:
        """Generators of J_i^hom outside I^hom + <t_i>."""
        target = self.I_hom + [self.ring.var(self.t_index(i))]
        return [g for g in self.J_hom[i].gens if not target.contains(g)]


def muvak_ideals(basis: Sequence[Poly], valuations: Sequence[MonomialValuation], grading: DeltaGrading,
                 method: str = "bayer", max_pairs: int = DEFAULT_MAX_PAIRS) -> MuvakIdeals:
    """I = ker(alpha), J_i = ker(beta_i), and their homogenizations w.r.t. W_ij = v_i(f_j)."""
    _check_valuations(valuations)
    W = weight_matrix(basis, valuations)
    m = len(valuations)
    alg0 = TaggedAlgebra(basis, valuations[0], grading, max_pairs)
    names = t_names(m, alg0.tags.names)
    I = kernel_ideals(alg0, False, max_pairs)
    J = [kernel_ideals(TaggedAlgebra(basis, v, grading, max_pairs), True, max_pairs) for v in valuations]
    I_hom = multi_homogenize(I, W, method, names, max_pairs)
    J_hom = [multi_homogenize(Ji, W, method, names, max_pairs) for Ji in J]
    return MuvakIdeals(W, I, J, I_hom, J_hom)


@dataclass
class MuvakRound:
    ideals: MuvakIdeals
    offenders: List[List[Poly]]
    added: List[Poly] = field(default_factory=list)


@dataclass
class MuvakRun:
    basis: List[Poly]
    degrees: List[DeltaDegree]
    rounds: int
    status: RunStatus
    log: List[MuvakRound] = field(default_factory=list)
    group: DeltaGroup = TRIVIAL

    @property
    def grading(self) -> DeltaGrading:
        return DeltaGrading(self.group, tuple(self.degrees))


def muvak_basis(gens: Sequence[Poly], valuations: Sequence[MonomialValuation], grading: DeltaGrading,
                round_cap: int = 20, method: str = "bayer", normalize: bool = True,
                dedupe: bool = True, max_pairs: int = DEFAULT_MAX_PAIRS) -> MuvakRun:
    """Add dehomogenized evaluations of offending J_i^hom generators until none remain.

    ``rounds`` counts every round including the final one in which all
    containments hold.  Ideals are recomputed from scratch each round.
    """
    _check_valuations(valuations)
    gens = list(gens)
    if not gens or any(not g for g in gens):
        raise ValueError("generators must be a nonempty list of nonzero polynomials")
    if len(grading.degrees) != len(gens):
        raise ValueError("one Delta-degree per generator required")
    basis = list(gens)
    degrees = list(grading.degrees)
    group = grading.group
    logs: List[MuvakRound] = []
    rounds = 0
    while rounds < round_cap:
        rounds += 1
        gr = DeltaGrading(group, degrees)
        ideals = muvak_ideals(basis, valuations, gr, method, max_pairs)
        offenders = [ideals.offenders(i) for i in range(len(valuations))]
        rnd = MuvakRound(ideals, offenders)
        logs.append(rnd)
        if not any(offenders):
            return MuvakRun(basis, degrees, rounds, RunStatus.COMPLETE, logs, group)
        alg = TaggedAlgebra(basis, valuations[0], gr, max_pairs)
        k = len(basis)
        t_idx = list(range(k, ideals.ring.nvars))
        new, new_deg = [], []
        for hs in offenders:
            for h in hs:
                hd = dehomogenize(h, t_idx)
                f = alg.evaluate(Poly(alg.tags, hd._terms))
                if not f:
                    continue
                d = alg.delta_of(next(iter(hd._terms)))
                f = normalized(f) if normalize else f
                if dedupe and any(f == g or f == -g for g in basis + new):
                    continue
                if dedupe and new + basis and faithfully_representable(
                        f, basis + new, valuations, DeltaGrading(group, degrees + new_deg), delta=d,
                        method=method, max_pairs=max_pairs)[0]:
                    continue
                new.append(f)
                new_deg.append(d)
        rnd.added = list(new)
        if not new:
            log.warning("offending generators all dehomogenize to representable elements; stopping")
            break
        basis += new
        degrees += new_deg
    return MuvakRun(basis, degrees, rounds, RunStatus.ROUND_CAP_HIT, logs, group)


def faithfully_representable(f: Poly, gens: Sequence[Poly], valuations: Sequence[MonomialValuation],
                             grading: DeltaGrading, delta: DeltaDegree = None, method: str = "bayer",
                             max_pairs: int = DEFAULT_MAX_PAIRS) -> Tuple[bool, Optional[Poly]]:
    """(verdict, witness h) for faithful representability of f in the gens.

    The verdict tests h^hom in I^hom + <theta> for some preimage h of f.  The
    witness comes independently from membership of f u^{v(f)} in the Rees-type
    algebra K[f_j u^{v(f_j)}, u_i^{-1}]: the degree-v(f) part of the
    membership certificate, with u^{-1} set to 1.  The two routes must agree.
    """
    _check_valuations(valuations)
    if not f:
        raise ValueError("zero has no valuation")
    gens = list(gens)
    alg = TaggedAlgebra(gens, valuations[0], grading, max_pairs)
    k = len(gens)
    d = alg.group.reduce(delta) if delta is not None else alg.infer_delta(f)
    h = alg.preimage(f, d)
    if h is None:
        raise NotInSubalgebraError(f"{f} is not in the subalgebra (with Delta-degree {d})")
    W = weight_matrix(gens, valuations)
    m = len(valuations)
    vf = [v.scalar(f) for v in valuations]

    # route 1: h^hom in I^hom + <theta>
    ideals = muvak_ideals(gens, valuations, grading, method, max_pairs)
    ring_t = ideals.ring
    hh = multi_homogenize_poly(W, h, ring=ring_t) if h else ring_t.zero()
    mind = [min(sum(a * b for a, b in zip(row, e)) for e in h._terms) for row in W] if h else vf
    theta_exp = [0] * k + [vf[i] - mind[i] for i in range(m)]
    if any(x < 0 for x in theta_exp):
        raise AssertionError("preimage has terms of value above v(f)")
    theta = ring_t.monomial(theta_exp)
    verdict = (ideals.I_hom + [theta]).contains(hh)

    # route 2: Rees-algebra membership, X_j -> f_j g^delta_j u^{W_.j}, T_i -> u_i^{-1}
    amb = AmbientRing(alg.ring, alg.group, list(grading.degrees) + [d], m)
    images = [amb.tagged(g, e.delta, [W[i][j] for i in range(m)]) for j, (g, e) in enumerate(zip(gens, alg.entries))]
    images += [amb.ring.var(amb.uoff + 2 * i + 1) for i in range(m)]
    names = alg.tags.names + ring_t.names[k:]
    mem = Membership(amb.ring, images, amb.relations, names, max_pairs)
    try:
        q = amb.tagged(f, d, vf)
    except ValueError:
        q = None
    H = mem.preimage(q) if q is not None else None
    witness = None
    if H is not None:
        # keep the part of (W | -I)-degree v(f); every such term has deg_i(X-part) >= v_i(f)
        def deg(e):
            return tuple(sum(W[i][j] * e[j] for j in range(k)) - e[k + i] for i in range(m))
        part = Poly(H.ring, {e: c for e, c in H._terms.items() if deg(e) == tuple(vf) and alg.delta_of(e[:k]) == d})
        acc = {}
        for e, c in part._terms.items():
            key = e[:k]
            acc[key] = acc.get(key, 0) + c
        wpoly = Poly(alg.tags, {e: c for e, c in acc.items() if c})
        if alg.evaluate(wpoly) == f:
            witness = wpoly
    if verdict != (witness is not None):
        raise AssertionError(f"faithful-representability routes disagree for {f}")
    return verdict, witness


@dataclass
class MuvakCertificate:
    verdict: bool
    ideals: MuvakIdeals
    offenders: List[List[Poly]]

    @property
    def witness(self) -> Optional[Poly]:
        for hs in self.offenders:
            if hs:
                return hs[0]
        return None

    def __bool__(self):
        return self.verdict


def verify_muvak(basis: Sequence[Poly], valuations: Sequence[MonomialValuation], grading: DeltaGrading,
                 method: str = "bayer", max_pairs: int = DEFAULT_MAX_PAIRS) -> MuvakCertificate:
    """J_i^hom inside I^hom + <t_i> for every i."""
    ideals = muvak_ideals(basis, valuations, grading, method, max_pairs)
    off = [ideals.offenders(i) for i in range(len(valuations))]
    return MuvakCertificate(not any(off), ideals, off)


def is_faithful_witness(h: Poly, f: Poly, gens: Sequence[Poly], valuations: Sequence[MonomialValuation]) -> bool:
    """h(gens) = f and every term of h has value at least v_i(f) for every i."""
    from .poly import substitute
    if substitute(h, list(gens)) != f:
        return False
    for e, c in h._terms.items():
        t = substitute(Poly(h.ring, {e: c}), list(gens))
        if not t:
            return False
        for v in valuations:
            if v.scalar(t) < v.scalar(f):
                return False
    return True


__all__ = ["MuvakIdeals", "MuvakRun", "MuvakCertificate", "muvak_ideals", "muvak_basis",
           "faithfully_representable", "verify_muvak", "is_faithful_witness", "WeightSystem",
           "InhomogeneousError"]
