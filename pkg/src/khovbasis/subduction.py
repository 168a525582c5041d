"""Homogeneous subduction against a finite set of Delta-homogeneous elements.

Preimages of initial forms are found by subalgebra membership: the images
in_v(f_i) are tagged with group-ring monomials g^{delta_i}, an elimination
Groebner basis of <X_i - in_v(f_i) g^{delta_i}> + (group relations) is
computed once per basis, and a normal form lying in K[X] is a witness.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .grading import DeltaDegree, DeltaGrading, DeltaGroup, GroupRingEncoding
from .groebner import DEFAULT_MAX_PAIRS, Ideal, _unique_names, normal_form
from .orderings import block, degrevlex
from .poly import Poly, PolyRing, substitute
from .valuation import GammaValue, MonomialValuation

log = logging.getLogger(__name__)

DEFAULT_MAX_ITER = 1000


class InhomogeneousError(ValueError):
    """An input that must be Delta-homogeneous is not (or its degree is unknown)."""


class NotInSubalgebraError(ValueError):
    pass


class Status(str, enum.Enum):
    REDUCED_TO_ZERO = "reduced_to_zero"
    IRREDUCIBLE_REMAINDER = "irreducible_remainder"
    ITERATION_CAP_HIT = "iteration_cap_hit"

    def __str__(self):
        return self.value


def tag_names(k: int, avoid: Sequence[str] = (), prefix: str = "X") -> Tuple[str, ...]:
    return _unique_names(avoid, [f"{prefix}{i + 1}" for i in range(k)])


class AmbientRing:
    """ring[x] extended by group-ring variables (and optionally Laurent variables u)."""

    def __init__(self, ring: PolyRing, group: DeltaGroup, degrees: Sequence[DeltaDegree],
                 n_laurent: int = 0):
        self.base = ring
        self.group = group
        self.enc = GroupRingEncoding.build(group, list(degrees) + [group.zero()])
        extra = list(self.enc.names)
        self.m = n_laurent
        for i in range(self.m):
            extra += [f"_u{i}", f"_u{i}bar"]
        extra = _unique_names(ring.names, extra)
        self.ring = ring.extend(*extra)
        n = ring.nvars
        self.goff = n
        self.uoff = n + self.enc.nvars
        rels = self.enc.relations(self.ring, self.goff)
        for i in range(self.m):
            u, ub = self.ring.var(self.uoff + 2 * i), self.ring.var(self.uoff + 2 * i + 1)
            rels.append(u * ub - 1)
        self.relations = rels

    def embed(self, f: Poly) -> Poly:
        return f.to_ring(self.ring, list(range(self.base.nvars)))

    def tag(self, delta: DeltaDegree, u: Sequence[int] = ()) -> List[int]:
        e = [0] * self.ring.nvars
        for j, x in enumerate(self.enc.exponent(delta)):
            e[self.goff + j] = x
        for i, a in enumerate(u):
            e[self.uoff + 2 * i + (0 if a >= 0 else 1)] = abs(a)
        return e

    def tagged(self, f: Poly, delta: DeltaDegree, u: Sequence[int] = ()) -> Poly:
        return self.embed(f).mul_monomial(self.tag(delta, u))


class Membership:
    """Subalgebra membership in an ambient ring modulo relations.

    ``images`` live in ``ambient``; the test answers whether q equals
    h(images) modulo ``relations`` for some polynomial h, and returns h.
    """

    def __init__(self, ambient: PolyRing, images: Sequence[Poly], relations: Sequence[Poly] = (),
                 names: Sequence[str] = None, max_pairs: int = DEFAULT_MAX_PAIRS):
        k = len(images)
        self.ambient = ambient
        self.tags = PolyRing(tuple(names) if names else tag_names(k))
        big_names = ambient.names + _unique_names(ambient.names, self.tags.names)
        self.big = PolyRing(big_names)
        n = ambient.nvars
        self.n = n
        emb = list(range(n))
        gens = [self.big.var(n + i) - img.to_ring(self.big, emb) for i, img in enumerate(images)]
        gens += [r.to_ring(self.big, emb) for r in relations]
        self.ideal = Ideal(self.big, gens)
        parts = [(degrevlex(n), list(range(n)))]
        if k:
            parts.append((degrevlex(k), list(range(n, n + k))))
        self.ordering = block(parts, n + k)
        self.max_pairs = max_pairs
        self._gb = None

    @property
    def basis(self) -> List[Poly]:
        if self._gb is None:
            self._gb = self.ideal.standard_basis(self.ordering, self.max_pairs)
        return self._gb

    def preimage(self, q: Poly) -> Optional[Poly]:
        if q.ring != self.ambient:
            raise ValueError("element is not in the ambient ring")
        nf = normal_form(q.to_ring(self.big, list(range(self.n))), self.basis, self.ordering)
        if any(any(e[:self.n]) for e in nf._terms):
            return None
        return Poly(self.tags, {e[self.n:]: c for e, c in nf._terms.items()})


@dataclass
class BasisEntry:
    f: Poly
    initial: Poly
    delta: DeltaDegree
    value: GammaValue


class TaggedAlgebra:
    """A finite basis with its valuation data and cached membership oracles."""

    def __init__(self, basis: Sequence[Poly], v: MonomialValuation, grading: DeltaGrading,
                 max_pairs: int = DEFAULT_MAX_PAIRS):
        basis = list(basis)
        if any(not f for f in basis):
            raise ValueError("basis elements must be nonzero")
        if len(grading.degrees) != len(basis):
            raise ValueError(f"{len(basis)} basis elements but {len(grading.degrees)} degrees")
        if basis and v.nvars != basis[0].ring.nvars:
            raise ValueError("valuation does not match the ring")
        self.ring = basis[0].ring if basis else None
        self.v = v
        self.grading = grading
        self.group = grading.group
        self.entries = [BasisEntry(f, v.initial_form(f), d, v.value(f)) for f, d in zip(basis, grading.degrees)]
        self.tags = PolyRing(tag_names(len(basis)))
        self.max_pairs = max_pairs
        self._initial = None
        self._full = None
        self._plain = None
        self._amb = None

    @property
    def basis(self) -> List[Poly]:
        return [e.f for e in self.entries]

    @property
    def ambient(self) -> AmbientRing:
        if self._amb is None:
            self._amb = AmbientRing(self.ring, self.group, [e.delta for e in self.entries])
        return self._amb

    def _membership(self, images) -> Membership:
        a = self.ambient
        return Membership(a.ring, images, a.relations, self.tags.names, self.max_pairs)

    @property
    def initial_membership(self) -> Membership:
        if self._initial is None:
            self._initial = self._membership([self.ambient.tagged(e.initial, e.delta) for e in self.entries])
        return self._initial

    @property
    def full_membership(self) -> Membership:
        if self._full is None:
            self._full = self._membership([self.ambient.tagged(e.f, e.delta) for e in self.entries])
        return self._full

    @property
    def plain_membership(self) -> Membership:
        if self._plain is None:
            self._plain = Membership(self.ring, self.basis, (), self.tags.names, self.max_pairs)
        return self._plain

    # --- gradings of the tag ring ---------------------------------------

    def delta_of(self, e) -> DeltaDegree:
        return self.group.combine([x.delta for x in self.entries], e)

    def gamma_of(self, e) -> GammaValue:
        acc = [0] * self.v.rank
        for x, ent in zip(e, self.entries):
            if x:
                for j, g in enumerate(ent.value):
                    acc[j] += x * g
        return tuple(acc)

    def truncate(self, h: Poly, gamma: Optional[GammaValue], delta: DeltaDegree) -> Poly:
        return Poly(h.ring, {e: c for e, c in h._terms.items()
                             if (gamma is None or self.gamma_of(e) == tuple(gamma))
                             and self.delta_of(e) == delta})

    def evaluate(self, h: Poly) -> Poly:
        if not self.entries:
            return self.ring.zero() if self.ring else h
        return substitute(h, self.basis)

    # --- membership -----------------------------------------------------

    def homogeneous_preimage(self, target: Poly, delta: DeltaDegree, gamma: GammaValue) -> Optional[Poly]:
        """h' with h'(in_v f_i) = target, homogeneous of (Gamma, Delta)-degree (gamma, delta)."""
        if not target:
            raise ValueError("target initial form must be nonzero")
        delta = self.group.reduce(delta)
        if not self.entries:
            return None
        try:
            q = self.ambient.tagged(target, delta)
        except ValueError:  # degree outside the monoid spanned by the basis degrees
            return None
        h = self.initial_membership.preimage(q)
        if h is None:
            return None
        h = self.truncate(h, gamma, delta)
        check = substitute(h, [e.initial for e in self.entries])
        if check != target:
            raise AssertionError(f"truncated preimage {h} does not evaluate to {target}")
        return h

    def preimage(self, f: Poly, delta: DeltaDegree) -> Optional[Poly]:
        """h of Delta-degree delta with h(f_1, ..., f_k) = f, or None."""
        if not f:
            return self.tags.zero()
        delta = self.group.reduce(delta)
        if not self.entries:
            return None
        try:
            q = self.ambient.tagged(f, delta)
        except ValueError:
            return None
        h = self.full_membership.preimage(q)
        return None if h is None else self.truncate(h, None, delta)

    def infer_delta(self, f: Poly) -> DeltaDegree:
        """Delta-degree of an element of the algebra, read off from a preimage."""
        if self.group.is_trivial:
            return ()
        for e in self.entries:
            if e.f == f:
                return e.delta
        h = self.plain_membership.preimage(f) if self.entries else None
        if h is None:
            raise InhomogeneousError(f"cannot infer the Delta-degree of {f}: not in the algebra; pass it explicitly")
        comps: Dict[DeltaDegree, Dict] = {}
        for e, c in h._terms.items():
            comps.setdefault(self.delta_of(e), {})[e] = c
        live = [d for d, t in comps.items() if self.evaluate(Poly(h.ring, t))]
        if len(live) != 1:
            raise InhomogeneousError(f"{f} is not Delta-homogeneous with respect to the basis degrees")
        return live[0]


@dataclass
class SubductionResult:
    f: Poly
    delta: DeltaDegree
    h: Poly
    r: Poly
    status: Status
    trail: List[GammaValue] = field(default_factory=list)

    @property
    def used(self) -> List[int]:
        """Indices of basis elements occurring in the witness."""
        return sorted({i for e in self.h._terms for i, x in enumerate(e) if x})

    @property
    def iterations(self) -> int:
        return len(self.trail) - (1 if self.r else 0) if self.trail else 0


def _as_algebra(basis, v, grading, max_pairs=DEFAULT_MAX_PAIRS) -> TaggedAlgebra:
    if isinstance(basis, TaggedAlgebra):
        return basis
    return TaggedAlgebra(basis, v, grading, max_pairs)


def homogeneous_preimage(target_initial: Tuple[Poly, DeltaDegree, GammaValue], basis, v: MonomialValuation = None,
                         grading: DeltaGrading = None) -> Optional[Poly]:
    """Module-level form: ``basis`` is a TaggedAlgebra or a list of polynomials."""
    p, delta, gamma = target_initial
    return _as_algebra(basis, v, grading).homogeneous_preimage(p, delta, gamma)


def subduct(f: Poly, basis, v: MonomialValuation = None, grading: DeltaGrading = None,
            max_iter: int = DEFAULT_MAX_ITER, delta: DeltaDegree = None) -> SubductionResult:
    """Subduct ``f`` against ``basis`` (a list of polynomials or a TaggedAlgebra).

    ``delta`` is the Delta-degree of f; it is inferred from a preimage of f
    when omitted and the group is nontrivial.
    """
    if max_iter < 1:
        raise ValueError("max_iter must be positive")
    alg = _as_algebra(basis, v, grading)
    v = alg.v
    tags = alg.tags
    if not f:
        return SubductionResult(f, alg.group.zero(), tags.zero(), f, Status.REDUCED_TO_ZERO)
    delta = alg.group.reduce(delta) if delta is not None else alg.infer_delta(f)
    r = f
    h = tags.zero()
    trail = [v.value(r)]
    steps = 0
    while True:
        if not r:
            status = Status.REDUCED_TO_ZERO
            break
        gamma = trail[-1]
        hp = alg.homogeneous_preimage(v.initial_form(r), delta, gamma)
        if hp is None:
            status = Status.IRREDUCIBLE_REMAINDER
            break
        if steps >= max_iter:
            status = Status.ITERATION_CAP_HIT
            break
        r = r - alg.evaluate(hp)
        h = h + hp
        steps += 1
        if r:
            g = v.value(r)
            if v.gamma_compare(g, gamma) <= 0:
                raise AssertionError(f"valuation did not increase: {gamma} -> {g}")
            trail.append(g)
    return SubductionResult(f, delta, h, r, status, trail)


def check_conditions(res: SubductionResult, alg: TaggedAlgebra) -> Dict[str, bool]:
    """Evaluate the five output conditions of homogeneous subduction."""
    v, f, h, r = alg.v, res.f, res.h, res.r
    out = {}
    out["(1) f = h(f_1..f_k) + r"] = f == alg.evaluate(h) + r
    ok2 = True
    if f:
        vf = v.value(f)
        for e, c in h._terms.items():
            t = alg.evaluate(Poly(h.ring, {e: c}))
            if not t or v.gamma_compare(v.value(t), vf) < 0 or alg.delta_of(e) != res.delta:
                ok2 = False
    out["(2) terms of h"] = ok2
    out["(3) h = 0 or v(r) > v(f)"] = (not h) or (not r) or v.gamma_compare(v.value(r), v.value(f)) > 0
    # r is Delta-homogeneous of deg(f) iff r g^delta = f g^delta - sum t(f) g^deg(t)
    ok4 = True
    if r and h:
        amb = alg.ambient
        lhs = amb.tagged(f, res.delta) - amb.tagged(r, res.delta)
        rhs = amb.ring.zero()
        for e, c in h._terms.items():
            rhs = rhs + amb.tagged(alg.evaluate(Poly(h.ring, {e: c})), alg.delta_of(e))
        ok4 = Ideal(amb.ring, amb.relations).contains(lhs - rhs) if amb.relations else lhs == rhs
    out["(4) r homogeneous of deg(f)"] = ok4
    out["(5) in(r) not in in(B)"] = (not r) or alg.homogeneous_preimage(v.initial_form(r), res.delta, v.value(r)) is None
    return out
