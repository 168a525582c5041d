"""Monomial valuations: linear on exponents, minimum over the support."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from . import kernels
from .orderings import MonomialOrdering
from .poly import Exponent, Poly

GammaValue = Tuple[int, ...]


@dataclass(frozen=True)
class MonomialValuation:
    """v(f) = min over Supp(f) of ``weights @ exponent``.

    Gamma = Z^r is ordered by comparing ``compare_rows @ gamma``
    lexicographically.  For the natural order on Z, ``compare_rows`` is
    ``((1,),)``; for a valuation induced by a monomial ordering the weights
    are the identity and ``compare_rows`` is the negated ordering matrix,
    since larger values correspond to smaller monomials.
    """

    weights: Tuple[Tuple[int, ...], ...]
    compare_rows: Tuple[Tuple[int, ...], ...]
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(tuple(int(x) for x in r) for r in self.weights))
        object.__setattr__(self, "compare_rows", tuple(tuple(int(x) for x in r) for r in self.compare_rows))
        if any(len(r) != self.rank for r in self.compare_rows):
            raise ValueError("comparison rows must have length equal to the rank")

    @classmethod
    def weight(cls, w: Sequence[int]) -> "MonomialValuation":
        w = tuple(int(x) for x in w)
        return cls((w,), ((1,),), f"weight({','.join(map(str, w))})")

    @classmethod
    def divisibility(cls, nvars: int, index: int, name: str = None) -> "MonomialValuation":
        w = [0] * nvars
        w[index] = 1
        v = cls.weight(w)
        return cls(v.weights, v.compare_rows, f"divisibility({name if name else index})")

    @classmethod
    def from_ordering(cls, ordering: MonomialOrdering) -> "MonomialValuation":
        n = ordering.nvars
        ident = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        neg = tuple(tuple(-x for x in r) for r in ordering.rows)
        return cls(ident, neg, f"ordering({ordering.name})")

    @property
    def rank(self) -> int:
        return len(self.weights)

    @property
    def nvars(self) -> int:
        return len(self.weights[0])

    @property
    def is_integral(self) -> bool:
        """True for Gamma = Z with the natural order."""
        return self.rank == 1 and self.compare_rows == ((1,),)

    def monomial_value(self, e: Exponent) -> GammaValue:
        return kernels.order_key(self.weights, e)

    def gamma_key(self, g: GammaValue):
        return kernels.order_key(self.compare_rows, tuple(g))

    def gamma_compare(self, g1: GammaValue, g2: GammaValue) -> int:
        if len(g1) != self.rank or len(g2) != self.rank:
            raise ValueError("Gamma value length mismatch")
        k1, k2 = self.gamma_key(g1), self.gamma_key(g2)
        return (k1 > k2) - (k1 < k2)

    def value(self, f: Poly) -> GammaValue:
        if not f:
            raise ValueError("valuation of the zero polynomial")
        return min((self.monomial_value(e) for e in f._terms), key=self.gamma_key)

    def initial_form(self, f: Poly) -> Poly:
        if not f:
            raise ValueError("initial form of the zero polynomial")
        vals = {e: self.monomial_value(e) for e in f._terms}
        low = min(vals.values(), key=self.gamma_key)
        key = self.gamma_key(low)
        return Poly(f.ring, {e: c for e, c in f._terms.items() if self.gamma_key(vals[e]) == key})

    def scalar(self, f: Poly) -> int:
        """v(f) as an int; only for Gamma = Z."""
        if not self.is_integral:
            raise ValueError("valuation is not integer-valued")
        return self.value(f)[0]

    def __str__(self):
        return self.label or f"valuation({self.weights})"


def value(v: MonomialValuation, f: Poly) -> GammaValue:
    return v.value(f)


def initial_form(v: MonomialValuation, f: Poly) -> Poly:
    return v.initial_form(f)


def gamma_compare(v: MonomialValuation, g1: GammaValue, g2: GammaValue) -> int:
    return v.gamma_compare(g1, g2)
