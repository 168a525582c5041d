"""Standard bases and the ideal operations built on them.

Global orderings use Buchberger's algorithm with the Gebauer-Moeller
criteria and the sugar selection strategy.  Orderings with local variables
use Mora's weak normal form (ecart-driven) inside the same pair loop, with
no pair criteria.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import kernels
from .orderings import MonomialOrdering, degrevlex, elimination
from .poly import Exponent, Poly, PolyRing

DEFAULT_MAX_PAIRS = 100_000


class PairLimitExceeded(RuntimeError):
    """The configured S-pair budget ran out before the basis was complete."""


# --------------------------------------------------------------------------
# low level helpers on term dicts

def _deg(e: Exponent) -> int:
    return sum(e)


def _tdeg(body: Dict[Exponent, Fraction]) -> int:
    return max(sum(e) for e in body)


def _monic(body, lead):
    c = body[lead]
    if c == 1:
        return dict(body)
    inv = 1 / c
    return {e: v * inv for e, v in body.items()}


def _spoly(a_lead, a_body, b_lead, b_body, lcm):
    """S-polynomial of two monic bodies."""
    out = kernels.axpy_inplace({}, a_body, Fraction(1), kernels.mono_quo(lcm, a_lead))
    return kernels.axpy_inplace(out, b_body, Fraction(-1), kernels.mono_quo(lcm, b_lead))


def _interreduce(elems, rows):
    """Reduced Groebner basis from a minimal one: tail-reduce each element."""
    out = []
    for i, (lead, body) in enumerate(elems):
        others = [(l, b) for j, (l, b) in enumerate(elems) if j != i]
        tail = dict(body)
        del tail[lead]
        rem = kernels.reduce_full(tail, others, rows) if tail else {}
        rem[lead] = Fraction(1)
        out.append((lead, rem))
    return out


# --------------------------------------------------------------------------
# Mora weak normal form

def _ecart(body, lead) -> int:
    return _tdeg(body) - sum(lead)


def _mora_reduce(h, reducers, rows, track=False):
    """Mora's weak normal form.

    ``reducers`` is a list of ``(lead, body, ecart, unit)`` where ``unit`` is
    None for genuine basis elements and the unit multiplier for earlier
    intermediate results.  Returns ``(unit, remainder)``; the unit is only
    tracked when ``track`` is set.
    """
    T = list(reducers)
    h = dict(h)
    n = len(next(iter(h))) if h else 0
    u = {(0,) * n: Fraction(1)} if track else None
    while h:
        e = kernels.leading_exp(h, rows)
        best = None
        for cand in T:
            if kernels.divides(cand[0], e) and (best is None or cand[2] < best[2]):
                best = cand
        if best is None:
            break
        lead, body, ec, unit = best
        eh = _tdeg(h) - sum(e)
        if ec > eh:
            T.append((e, dict(h), eh, dict(u) if track else {}))
        q = kernels.mono_quo(e, lead)
        c = -h[e] / body[lead]
        kernels.axpy_inplace(h, body, c, q)
        if track and unit:
            kernels.axpy_inplace(u, unit, c, q)
    return u, h


# --------------------------------------------------------------------------
# the pair loop

@dataclass
class _State:
    rows: tuple
    is_global: bool
    max_pairs: int
    leads: List[Exponent] = field(default_factory=list)
    bodies: List[dict] = field(default_factory=list)
    sugars: List[int] = field(default_factory=list)
    active: List[int] = field(default_factory=list)
    pairs: List[Tuple[int, int, Exponent, int]] = field(default_factory=list)
    processed: int = 0

    def reducers(self):
        return [(self.leads[i], self.bodies[i]) for i in self.active]

    def mora_reducers(self):
        return [(self.leads[i], self.bodies[i], _ecart(self.bodies[i], self.leads[i]), None)
                for i in self.active]

    def reduce(self, body):
        if self.is_global:
            return kernels.reduce_full(body, self.reducers(), self.rows)
        return _mora_reduce(body, self.mora_reducers(), self.rows)[1]

    def add(self, body, sugar):
        lead = kernels.leading_exp(body, self.rows)
        body = _monic(body, lead)
        idx = len(self.leads)
        self.leads.append(lead)
        self.bodies.append(body)
        self.sugars.append(sugar)
        if self.is_global:
            self._gm_update(idx)
        else:
            for j in self.active:
                self.pairs.append((j, idx, kernels.mono_lcm(self.leads[j], lead), self._pair_sugar(j, idx)))
            self.active.append(idx)

    def _pair_sugar(self, i, j):
        lcm = kernels.mono_lcm(self.leads[i], self.leads[j])
        d = _deg(lcm)
        return max(self.sugars[i] + d - _deg(self.leads[i]), self.sugars[j] + d - _deg(self.leads[j]))

    def _gm_update(self, h):
        lh = self.leads[h]
        cands = list(self.active)
        kept = []
        while cands:
            g1 = cands.pop(0)
            l1 = kernels.mono_lcm(lh, self.leads[g1])
            if kernels.coprime(lh, self.leads[g1]):
                kept.append(g1)
                continue
            dominated = any(kernels.divides(kernels.mono_lcm(lh, self.leads[g2]), l1) for g2 in cands) or \
                any(kernels.divides(kernels.mono_lcm(lh, self.leads[g2]), l1) for g2 in kept)
            if not dominated:
                kept.append(g1)
        new_pairs = [g for g in kept if not kernels.coprime(lh, self.leads[g])]
        old = []
        for (g1, g2, l, s) in self.pairs:
            if kernels.divides(lh, l) and kernels.mono_lcm(self.leads[g1], lh) != l \
                    and kernels.mono_lcm(lh, self.leads[g2]) != l:
                continue
            old.append((g1, g2, l, s))
        for g in new_pairs:
            old.append((g, h, kernels.mono_lcm(self.leads[g], lh), self._pair_sugar(g, h)))
        self.pairs = old
        self.active = [g for g in self.active if not kernels.divides(lh, self.leads[g])] + [h]

    def run(self):
        while self.pairs:
            best = min(range(len(self.pairs)), key=lambda k: (self.pairs[k][3], self.pairs[k][0], self.pairs[k][1]))
            i, j, lcm, sugar = self.pairs.pop(best)
            self.processed += 1
            if self.processed > self.max_pairs:
                raise PairLimitExceeded(f"more than {self.max_pairs} S-pairs processed")
            s = _spoly(self.leads[i], self.bodies[i], self.leads[j], self.bodies[j], lcm)
            if not s:
                continue
            r = self.reduce(s)
            if r:
                self.add(r, sugar)


def _compute_basis(bodies: List[dict], ordering: MonomialOrdering, max_pairs: int) -> List[Tuple[Exponent, dict]]:
    rows = ordering.rows
    is_global = ordering.is_global().all_global
    st = _State(rows, is_global, max_pairs)
    for b in sorted(bodies, key=lambda b: (_tdeg(b), ordering.key(kernels.leading_exp(b, rows)))):
        r = st.reduce(b) if st.active else dict(b)
        if r:
            st.add(r, _tdeg(b))
    st.run()
    elems = [(st.leads[i], st.bodies[i]) for i in st.active]
    # minimalize (the GM update already does this for global orders)
    minimal = []
    for k, (lead, body) in enumerate(elems):
        if any(kernels.divides(l2, lead) and (l2 != lead or j < k)
               for j, (l2, _) in enumerate(elems) if j != k):
            continue
        minimal.append((lead, body))
    if is_global:
        minimal = _interreduce(minimal, rows)
    minimal.sort(key=lambda lb: ordering.key(lb[0]), reverse=True)
    return minimal


# --------------------------------------------------------------------------
# public operations

def standard_basis(gens, ordering: MonomialOrdering = None, max_pairs: int = DEFAULT_MAX_PAIRS) -> List[Poly]:
    """Reduced Groebner basis (global orders) or minimal standard basis (mixed orders)."""
    if isinstance(gens, Ideal):
        return gens.standard_basis(ordering, max_pairs)
    gens = [g for g in gens if g]
    if not gens:
        return []
    ring = gens[0].ring
    ordering = ordering or degrevlex(ring.nvars)
    if ordering.nvars != ring.nvars:
        raise ValueError("ordering does not match the ring")
    basis = _compute_basis([g._terms for g in gens], ordering, max_pairs)
    return [Poly(ring, body) for _, body in basis]


def normal_form(f: Poly, basis: Sequence[Poly], ordering: MonomialOrdering = None) -> Poly:
    """Remainder of ``f`` modulo ``basis``.

    Under a global ordering this is full division with remainder.  With local
    variables it is Mora's weak normal form: only the leading term is
    guaranteed irreducible, and the remainder r satisfies u*f - r in the
    ideal for a unit u (see ``mora_normal_form``).
    """
    ordering = ordering or degrevlex(f.ring.nvars)
    basis = [b for b in basis if b]
    if not f or not basis:
        return f
    rows = ordering.rows
    if ordering.is_global().all_global:
        red = []
        for b in basis:
            lead = kernels.leading_exp(b._terms, rows)
            red.append((lead, _monic(b._terms, lead)))
        return Poly(f.ring, kernels.reduce_full(f._terms, red, rows))
    return mora_normal_form(f, basis, ordering)[1]


def mora_normal_form(f: Poly, basis: Sequence[Poly], ordering: MonomialOrdering) -> Tuple[Poly, Poly]:
    """(u, r) with u*f - r in <basis> and the leading term of u constant."""
    rows = ordering.rows
    reducers = []
    for b in basis:
        if b:
            lead = kernels.leading_exp(b._terms, rows)
            reducers.append((lead, b._terms, _ecart(b._terms, lead), None))
    if not f:
        return f.ring.one(), f
    u, r = _mora_reduce(f._terms, reducers, rows, track=True)
    return Poly(f.ring, u), Poly(f.ring, r)


class Ideal:
    """Generators plus a per-ordering cache of standard bases."""

    def __init__(self, ring: PolyRing, gens: Sequence[Poly] = ()):
        gens = tuple(g for g in gens if g)
        for g in gens:
            if g.ring != ring:
                raise ValueError(f"generator {g} is not in {ring}")
        self.ring = ring
        self.gens = gens
        self._cache: Dict[MonomialOrdering, List[Poly]] = {}

    def standard_basis(self, ordering: MonomialOrdering = None, max_pairs: int = DEFAULT_MAX_PAIRS) -> List[Poly]:
        ordering = ordering or degrevlex(self.ring.nvars)
        sb = self._cache.get(ordering)
        if sb is None:
            sb = standard_basis(list(self.gens), ordering, max_pairs) if self.gens else []
            self._cache[ordering] = sb
        return list(sb)

    def groebner_basis(self) -> List[Poly]:
        return self.standard_basis()

    def reduce(self, f: Poly) -> Poly:
        return normal_form(f, self.groebner_basis(), degrevlex(self.ring.nvars))

    def contains(self, f: Poly) -> bool:
        if f.ring != self.ring:
            raise ValueError("polynomial is not in the ideal's ring")
        return not f or not self.reduce(f)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.groebner_basis())

    def __add__(self, other):
        if isinstance(other, Ideal):
            if other.ring != self.ring:
                raise ValueError("ideals live in different rings")
            return Ideal(self.ring, self.gens + other.gens)
        return Ideal(self.ring, self.gens + tuple(other))

    def subset_of(self, other: "Ideal") -> Tuple[bool, Optional[Poly]]:
        return ideal_containment(self, other)

    def equals(self, other: "Ideal") -> bool:
        return ideal_containment(self, other)[0] and ideal_containment(other, self)[0]

    def __repr__(self):
        return f"Ideal({self.ring}, [{', '.join(map(str, self.gens))}])"


@dataclass(frozen=True)
class RingMap:
    """Source ring -> target ring (optionally modulo ``relations``), X_i -> images[i]."""

    source: PolyRing
    target: PolyRing
    images: Tuple[Poly, ...]
    relations: Tuple[Poly, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        object.__setattr__(self, "relations", tuple(self.relations))
        if len(self.images) != self.source.nvars:
            raise ValueError("one image per source variable required")
        for p in self.images + self.relations:
            if p.ring != self.target:
                raise ValueError(f"{p} is not in the target ring")


def _unique_names(existing: Sequence[str], new: Sequence[str]) -> Tuple[str, ...]:
    taken = set(existing)
    out = []
    for n in new:
        while n in taken:
            n = n + "_"
        taken.add(n)
        out.append(n)
    return tuple(out)


def graph_ideal(m: RingMap) -> Tuple[PolyRing, List[Poly]]:
    """<X_i - image_i> + relations in K[target vars, source vars]."""
    n, k = m.target.nvars, m.source.nvars
    ring = PolyRing(m.target.names + _unique_names(m.target.names, m.source.names))
    emb = list(range(n))
    gens = [ring.var(n + i) - img.to_ring(ring, emb) for i, img in enumerate(m.images)]
    gens += [r.to_ring(ring, emb) for r in m.relations]
    return ring, gens


def kernel_of_map(m: RingMap, max_pairs: int = DEFAULT_MAX_PAIRS) -> Ideal:
    ring, gens = graph_ideal(m)
    n = m.target.nvars
    elim = eliminate(Ideal(ring, gens), list(range(n)), max_pairs)
    # the retained variables are the source variables, in order
    return Ideal(m.source, [Poly(m.source, g._terms) for g in elim.gens])


def eliminate(I: Ideal, variables: Sequence, max_pairs: int = DEFAULT_MAX_PAIRS) -> Ideal:
    """I intersected with the subring of the remaining variables."""
    idx = sorted(I.ring.index(v) if isinstance(v, str) else v for v in variables)
    keep = [i for i in range(I.ring.nvars) if i not in set(idx)]
    sub = PolyRing(tuple(I.ring.names[i] for i in keep))
    if not keep:
        return Ideal(sub, [])
    ordering = elimination(I.ring.nvars, idx)
    out = []
    for g in I.standard_basis(ordering, max_pairs):
        if all(not any(e[i] for i in idx) for e in g._terms):
            out.append(g.restrict(sub, keep))
    return Ideal(sub, out)


def exact_divide(a: Poly, b: Poly) -> Poly:
    """a / b, raising if b does not divide a."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    ordering = degrevlex(a.ring.nvars)
    rows = ordering.rows
    lb = kernels.leading_exp(b._terms, rows)
    cb = b._terms[lb]
    p = dict(a._terms)
    q: Dict[Exponent, Fraction] = {}
    while p:
        e = kernels.leading_exp(p, rows)
        if not kernels.divides(lb, e):
            raise ValueError(f"{b} does not divide {a}")
        m = kernels.mono_quo(e, lb)
        c = p[e] / cb
        q[m] = c
        kernels.axpy_inplace(p, b._terms, -c, m)
    return Poly(a.ring, q)


def ideal_quotient(I: Ideal, f: Poly, max_pairs: int = DEFAULT_MAX_PAIRS) -> Ideal:
    """I : f via the intersection I cap <f> (auxiliary variable s)."""
    if not f:
        raise ValueError("quotient by zero")
    if f.is_constant():
        return Ideal(I.ring, I.gens)
    if I.is_zero():
        return Ideal(I.ring, [])
    n = I.ring.nvars
    ring = I.ring.extend(*_unique_names(I.ring.names, ["_s"]))
    emb = list(range(n))
    s = ring.var(n)
    gens = [s * g.to_ring(ring, emb) for g in I.gens] + [(1 - s) * f.to_ring(ring, emb)]
    inter = eliminate(Ideal(ring, gens), [n], max_pairs)
    return Ideal(I.ring, [exact_divide(Poly(I.ring, g._terms), f) for g in inter.gens])


def saturation(I: Ideal, f: Poly, max_pairs: int = DEFAULT_MAX_PAIRS) -> Tuple[Ideal, int]:
    """I : f^infinity by iterated quotients; returns (ideal, number of quotient steps)."""
    J = I
    steps = 0
    while True:
        J2 = ideal_quotient(J, f, max_pairs)
        steps += 1
        if ideal_containment(J2, J)[0]:
            return J2, steps
        J = J2


def ideal_quotient_saturation(I: Ideal, f: Poly, mode: str = "saturation",
                              max_pairs: int = DEFAULT_MAX_PAIRS) -> Ideal:
    if mode == "quotient":
        return ideal_quotient(I, f, max_pairs)
    if mode == "saturation":
        return saturation(I, f, max_pairs)[0]
    raise ValueError(f"unknown mode {mode!r}")


def ideal_containment(I: Ideal, J: Ideal) -> Tuple[bool, Optional[Poly]]:
    """Is I a subset of J?  On failure returns a generator of I outside J."""
    if I.ring != J.ring:
        raise ValueError("ideals live in different rings")
    if not I.gens:
        return True, None
    gb = J.groebner_basis()
    ordering = degrevlex(J.ring.nvars)
    for g in I.gens:
        if normal_form(g, gb, ordering):
            return False, g
    return True, None


def spoly_residues(basis: Sequence[Poly], ordering: MonomialOrdering) -> List[Poly]:
    """Normal forms of all S-polynomials of ``basis`` (all zero for a standard basis)."""
    rows = ordering.rows
    elems = []
    for b in basis:
        lead = kernels.leading_exp(b._terms, rows)
        elems.append((lead, _monic(b._terms, lead)))
    out = []
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            lcm = kernels.mono_lcm(elems[i][0], elems[j][0])
            s = _spoly(elems[i][0], elems[i][1], elems[j][0], elems[j][1], lcm)
            sp = Poly(basis[0].ring, s)
            out.append(normal_form(sp, basis, ordering))
    return out
