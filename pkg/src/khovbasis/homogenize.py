"""Weighted homogenization of polynomials and ideals.

Auxiliary variables have degree -1 (``sign=-1``, the default) or +1.  Ideals
are homogenized either with Bayer's method (one standard basis under a
tailored matrix ordering, then strip powers of t) or by saturating the
ideal of homogenized generators with iterated quotients.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

from .groebner import DEFAULT_MAX_PAIRS, Ideal, ideal_containment, ideal_quotient, saturation, standard_basis
from .orderings import bayer_matrix
from .poly import Poly, PolyRing

log = logging.getLogger(__name__)


class BayerPreconditionError(ValueError):
    """Bayer's method needs non-negative weights; use method='saturation'."""


@dataclass(frozen=True)
class WeightSystem:
    matrix: Tuple[Tuple[int, ...], ...]
    signs: Tuple[int, ...] = ()

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in r) for r in self.matrix)
        object.__setattr__(self, "matrix", m)
        signs = tuple(self.signs) or (-1,) * len(m)
        if len(signs) != len(m) or any(s not in (1, -1) for s in signs):
            raise ValueError("one sign (+1 or -1) per weight row")
        object.__setattr__(self, "signs", signs)


def _wdeg(w: Sequence[int], e) -> int:
    return sum(a * b for a, b in zip(w, e))


def mindeg(w, f: Poly) -> Union[int, Tuple[int, ...]]:
    """Minimal weighted degree of the terms of f; a tuple when ``w`` is a matrix."""
    if not f:
        raise ValueError("minimal degree of the zero polynomial")
    if w and isinstance(w[0], (list, tuple)):
        return tuple(mindeg(row, f) for row in w)
    return min(_wdeg(w, e) for e in f._terms)


def topdeg(w: Sequence[int], f: Poly) -> int:
    if not f:
        raise ValueError("top degree of the zero polynomial")
    return max(_wdeg(w, e) for e in f._terms)


def homogenize_poly(w: Sequence[int], sign: int, f: Poly, t_name: str = "t", ring: PolyRing = None) -> Poly:
    """Homogenize ``f`` with one extra variable of degree ``sign``.

    With sign -1 the result has degree mindeg(f), with sign +1 degree
    topdeg(f).  ``ring`` may be given to reuse an already-extended ring whose
    last variable is t.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    w = tuple(w)
    if len(w) != f.ring.nvars:
        raise ValueError("weight row length does not match the ring")
    target = ring or f.ring.extend(t_name)
    if not f:
        return target.zero()
    if sign < 0:
        base = mindeg(w, f)
        shift = lambda d: d - base  # noqa: E731
    else:
        base = topdeg(w, f)
        shift = lambda d: base - d  # noqa: E731
    return target.from_terms((c, e + (shift(_wdeg(w, e)),)) for e, c in f._terms.items())


def multi_homogenize_poly(W, f: Poly, signs: Sequence[int] = None, t_names: Sequence[str] = None,
                          ring: PolyRing = None) -> Poly:
    """Homogenize ``f`` row by row, one new variable per row of ``W``.

    Earlier auxiliary variables get weight 0 in later rows.  ``ring`` may be
    an already-extended ring whose trailing variables are the t's.
    """
    k = f.ring.nvars
    m = len(W)
    signs = tuple(signs) if signs else (-1,) * m
    if ring is None:
        t_names = t_names or (("t",) if m == 1 else tuple(f"t{i + 1}" for i in range(m)))
        ring = f.ring.extend(*t_names)
    g = f
    for i, (row, sign) in enumerate(zip(W, signs)):
        row = tuple(row) + (0,) * i
        g = homogenize_poly(row, sign, g, ring=PolyRing(ring.names[:k + i + 1]))
    return g.to_ring(ring, list(range(k + m)))


def dehomogenize(f: Poly, t_vars: Sequence, drop: bool = True) -> Poly:
    """Set the given variables to 1; by default also drop them from the ring."""
    idx = sorted(f.ring.index(v) if isinstance(v, str) else v for v in t_vars)
    g = f.specialize({i: 1 for i in idx})
    if not drop:
        return g
    keep = [i for i in range(f.ring.nvars) if i not in set(idx)]
    sub = PolyRing(tuple(f.ring.names[i] for i in keep))
    return g.restrict(sub, keep)


def _bayer(I: Ideal, w: Tuple[int, ...], sign: int, ring_t: PolyRing, max_pairs: int) -> List[Poly]:
    k = I.ring.nvars
    if any(x < 0 for x in w):
        raise BayerPreconditionError(f"weights {w} have negative entries; use method='saturation'")
    last = max(i for i in range(k) if w[i])
    perm = [i for i in range(k) if i != last] + [last]
    inner = PolyRing(tuple(I.ring.names[i] for i in perm) + (ring_t.names[-1],))
    to_inner = [perm.index(i) for i in range(k)] + [k]
    back = [perm[j] for j in range(k)] + [k]
    gens = [homogenize_poly(w, sign, g, ring=ring_t).to_ring(inner, to_inner) for g in I.gens]
    ordering = bayer_matrix([w[i] for i in perm], sign)
    out = []
    for g in standard_basis(gens, ordering, max_pairs):
        g, _ = g.divide_by_var_power(k)
        out.append(g.to_ring(ring_t, back))
    return out


def homogenize_ideal(I: Ideal, w: Sequence[int], sign: int = -1, method: str = "bayer",
                     t_name: str = "t", max_pairs: int = DEFAULT_MAX_PAIRS, certify: bool = True) -> Ideal:
    """I^hom in I.ring[t].

    With sign -1 the Bayer standard basis only generates the extension of
    I^hom to the localization.  ``certify`` checks that the stripped basis
    contains the homogenized generators and is t-saturated, which together
    prove it generates I^hom in the polynomial ring; otherwise the result is
    repaired by saturating.  ``certify=False`` returns the raw basis.
    """
    w = tuple(int(x) for x in w)
    if len(w) != I.ring.nvars:
        raise ValueError("weight row length does not match the ring")
    ring_t = I.ring.extend(t_name)
    k = I.ring.nvars
    if not any(w) or I.is_zero():
        return Ideal(ring_t, [g.to_ring(ring_t, list(range(k))) for g in I.gens])
    if method == "bayer":
        H = Ideal(ring_t, _bayer(I, w, sign, ring_t, max_pairs))
        if sign > 0 or not certify:
            return H
        return _contract(H, [homogenize_poly(w, sign, g, ring=ring_t) for g in I.gens], k, max_pairs)
    if method == "saturation":
        tilde = Ideal(ring_t, [homogenize_poly(w, sign, g, ring=ring_t) for g in I.gens])
        sat, _ = saturation(tilde, ring_t.var(k), max_pairs)
        return Ideal(ring_t, sat.groebner_basis())
    raise ValueError(f"unknown homogenization method {method!r}")


CONTRACTION_REPAIRS = 0  # how many sign -1 Bayer results needed repair


def _contract(H: Ideal, tilde: List[Poly], k: int, max_pairs: int) -> Ideal:
    """Polynomial-ring generators of I^hom from a Bayer basis of its localization."""
    global CONTRACTION_REPAIRS
    t = H.ring.var(k)
    if ideal_containment(Ideal(H.ring, tilde), H)[0] and \
            ideal_containment(ideal_quotient(H, t, max_pairs), H)[0]:
        return H
    # a unit of degree 0 involving the X's was used: 1 - x t is one when deg x = 1
    CONTRACTION_REPAIRS += 1
    log.info("Bayer basis generates I^hom only after localization; saturating")
    sat, _ = saturation(H + tilde, t, max_pairs)
    return Ideal(H.ring, sat.groebner_basis())


def multi_homogenize(I: Ideal, W, method: str = "bayer", t_names: Sequence[str] = None,
                     max_pairs: int = DEFAULT_MAX_PAIRS) -> Ideal:
    """Homogenize row by row; row i gets its own variable t_i.

    Earlier t variables have weight 0 for later rows.  Rows with negative
    entries are routed to the saturation method when ``method='bayer'``.
    """
    ws = W if isinstance(W, WeightSystem) else WeightSystem(tuple(tuple(r) for r in W))
    m = len(ws.matrix)
    if t_names is None:
        t_names = ("t",) if m == 1 else tuple(f"t{i + 1}" for i in range(m))
    if len(t_names) != m:
        raise ValueError("one t name per weight row")
    J = I
    for row, sign, name in zip(ws.matrix, ws.signs, t_names):
        row = tuple(row) + (0,) * (J.ring.nvars - len(row))
        use = method
        if method == "bayer" and any(x < 0 for x in row):
            log.warning("weight row %s has negative entries; using saturation", row)
            use = "saturation"
        J = homogenize_ideal(J, row, sign, use, name, max_pairs)
    k = I.ring.nvars
    # I^hom is saturated in every t, so generators may shed t powers
    gens = []
    for g in J.gens:
        for i in range(k, J.ring.nvars):
            g, _ = g.divide_by_var_power(i)
        gens.append(g)
    return Ideal(J.ring, gens)


def initial_ideal(I: Ideal, w: Sequence[int], method: str = "bayer",
                  max_pairs: int = DEFAULT_MAX_PAIRS) -> Ideal:
    """Ideal of w-initial forms (lowest weight part) of the elements of I."""
    w = tuple(w)
    if method == "bayer" and any(x < 0 for x in w):
        method = "saturation"
    H = homogenize_ideal(I, w, -1, method, "_t", max_pairs)
    k = I.ring.nvars
    gens = [g.specialize({k: 0}).restrict(I.ring, list(range(k))) for g in H.gens]
    return Ideal(I.ring, gens)


def is_saturated(H: Ideal, t_index: int) -> bool:
    """H : t == H."""
    from .groebner import ideal_containment, ideal_quotient
    Q = ideal_quotient(H, H.ring.var(t_index))
    return ideal_containment(Q, H)[0]
