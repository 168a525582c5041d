"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Dict, Iterable, List, Sequence, Tuple

from . import kernels

Exponent = Tuple[int, ...]
Term = Tuple[Fraction, Exponent]


class RingMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class PolyRing:
    names: Tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if any(not n for n in names):
            raise ValueError("variable names must be non-empty")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(1)

    def const(self, c) -> "Poly":
        c = Fraction(c)
        return Poly(self, {(0,) * self.nvars: c} if c else {})

    def var(self, name_or_index) -> "Poly":
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        e = [0] * self.nvars
        e[i] = 1
        return Poly(self, {tuple(e): Fraction(1)})

    def gens(self) -> List["Poly"]:
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, exp: Sequence[int], coeff=1) -> "Poly":
        exp = tuple(exp)
        if len(exp) != self.nvars:
            raise ValueError(f"exponent {exp} has wrong length for {self}")
        if any(e < 0 for e in exp):
            raise ValueError(f"negative exponent {exp}")
        c = Fraction(coeff)
        return Poly(self, {exp: c} if c else {})

    def from_terms(self, terms: Iterable[Tuple[object, Sequence[int]]]) -> "Poly":
        out: Dict[Exponent, Fraction] = {}
        for c, e in terms:
            e = tuple(e)
            if len(e) != self.nvars:
                raise ValueError(f"exponent {e} has wrong length for {self}")
            v = out.get(e, Fraction(0)) + Fraction(c)
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly(self, out)

    def extend(self, *names: str) -> "PolyRing":
        return PolyRing(self.names + tuple(names))

    def __str__(self):
        return "QQ[" + ", ".join(self.names) + "]"


def _coerce_scalar(c):
    if isinstance(c, (int, Fraction)):
        return Fraction(c)
    return None


def degrevlex_key(e: Exponent):
    return (sum(e), tuple(-x for x in reversed(e)))


class Poly:
    """Immutable polynomial; ``terms`` maps exponent tuples to nonzero Fractions."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Dict[Exponent, Fraction]):
        self.ring = ring
        self._terms = terms
        self._hash = None

    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        return dict(self._terms)

    # --- structure -----------------------------------------------------

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def constant_coeff(self) -> Fraction:
        return self._terms.get((0,) * self.ring.nvars, Fraction(0))

    def coeff(self, exp: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def exponents(self) -> List[Exponent]:
        return sorted(self._terms, key=degrevlex_key, reverse=True)

    def support(self) -> List[Term]:
        return [(self._terms[e], e) for e in self.exponents()]

    def total_degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial")
        return max(sum(e) for e in self._terms)

    def variables(self) -> List[int]:
        used = set()
        for e in self._terms:
            used.update(i for i, x in enumerate(e) if x)
        return sorted(used)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self._terms), default=0)

    def min_degree_in(self, i: int) -> int:
        return min((e[i] for e in self._terms), default=0)

    # --- arithmetic ----------------------------------------------------

    def _check(self, other: "Poly"):
        if other.ring != self.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def _lift(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        c = _coerce_scalar(other)
        if c is None:
            return NotImplemented
        return self.ring.const(c)

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return Poly(self.ring, kernels.axpy_inplace(dict(self._terms), other._terms, 1, None))

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return Poly(self.ring, kernels.axpy_inplace(dict(self._terms), other._terms, -1, None))

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = _coerce_scalar(other)
            if c is None:
                return NotImplemented
            if not c:
                return self.ring.zero()
            return Poly(self.ring, {e: v * c for e, v in self._terms.items()})
        self._check(other)
        return Poly(self.ring, kernels.mul_terms(self._terms, other._terms))

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = _coerce_scalar(other)
        if c is None:
            return NotImplemented
        if not c:
            raise ZeroDivisionError("polynomial division by zero")
        return self * (1 / c)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_monomial(self, exp: Sequence[int], coeff=1) -> "Poly":
        exp = tuple(exp)
        c = Fraction(coeff)
        if not c:
            return self.ring.zero()
        return Poly(self.ring, kernels.axpy_inplace({}, self._terms, c, exp))

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self._terms == other._terms
        c = _coerce_scalar(other)
        if c is None:
            return NotImplemented
        return self._terms == self.ring.const(c)._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # --- transformations ----------------------------------------------

    def subs(self, images: Sequence["Poly"]) -> "Poly":
        return substitute(self, images)

    def specialize(self, values: Dict[int, object]) -> "Poly":
        """Replace selected variables by rational constants, keeping the ring."""
        vals = {i: Fraction(v) for i, v in values.items()}
        out: Dict[Exponent, Fraction] = {}
        for e, c in self._terms.items():
            e2 = list(e)
            for i, v in vals.items():
                if e2[i]:
                    c = c * v ** e2[i]
                    e2[i] = 0
            if not c:
                continue
            key = tuple(e2)
            s = out.get(key, Fraction(0)) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return Poly(self.ring, out)

    def to_ring(self, ring: PolyRing, positions: Sequence[int]) -> "Poly":
        """Embed into ``ring`` sending variable i to variable ``positions[i]``."""
        if len(positions) != self.ring.nvars:
            raise ValueError("positions must cover every variable")
        n = ring.nvars
        out = {}
        for e, c in self._terms.items():
            e2 = [0] * n
            for i, x in enumerate(e):
                if x:
                    e2[positions[i]] += x
            out[tuple(e2)] = c
        return Poly(ring, out)

    def restrict(self, ring: PolyRing, keep: Sequence[int]) -> "Poly":
        """Inverse of ``to_ring``: requires every other variable to be absent."""
        keep = list(keep)
        keep_set = set(keep)
        out = {}
        for e, c in self._terms.items():
            if any(x for i, x in enumerate(e) if i not in keep_set):
                raise ValueError("polynomial involves a dropped variable")
            out[tuple(e[i] for i in keep)] = c
        return Poly(ring, out)

    def divide_by_var_power(self, i: int) -> Tuple["Poly", int]:
        """Strip the largest power of variable i dividing self."""
        if not self._terms:
            return self, 0
        m = self.min_degree_in(i)
        if not m:
            return self, 0
        out = {}
        for e, c in self._terms.items():
            e2 = list(e)
            e2[i] -= m
            out[tuple(e2)] = c
        return Poly(self.ring, out), m

    def content_normalized(self) -> "Poly":
        """Scale to coprime integer coefficients with positive leading coefficient."""
        if not self._terms:
            return self
        dens = reduce(lambda a, b: a * b // gcd(a, b), (c.denominator for c in self._terms.values()))
        nums = [int(c * dens) for c in self._terms.values()]
        g = reduce(gcd, (abs(x) for x in nums))
        scale = Fraction(dens, g)
        lead = self._terms[self.exponents()[0]]
        if lead < 0:
            scale = -scale
        return self * scale

    def monic(self, lead_exp: Exponent) -> "Poly":
        return self * (1 / self._terms[lead_exp])

    # --- printing ------------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


def _format_monomial(names: Sequence[str], e: Exponent) -> str:
    parts = []
    for name, x in zip(names, e):
        if x == 1:
            parts.append(name)
        elif x:
            parts.append(f"{name}^{x}")
    return "*".join(parts)


def _format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(f: Poly) -> str:
    if not f:
        return "0"
    out = []
    for i, (c, e) in enumerate(f.support()):
        neg = c < 0
        a = -c if neg else c
        mono = _format_monomial(f.ring.names, e)
        if not mono:
            body = _format_rational(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_rational(a)}*{mono}"
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def support(f: Poly) -> List[Term]:
    return f.support()


def arith(op: str, f: Poly, g: Poly = None) -> Poly:
    if op == "neg":
        return -f
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


def substitute(h: Poly, images: Sequence[Poly]) -> Poly:
    """Evaluate ``h`` at ``images``; all images must share one ring."""
    images = list(images)
    if len(images) != h.ring.nvars:
        raise ValueError(f"expected {h.ring.nvars} images, got {len(images)}")
    if not images:
        raise ValueError("cannot substitute into a ring without variables")
    target = images[0].ring
    for g in images:
        if g.ring != target:
            raise RingMismatchError("images live in different rings")
    powers: Dict[Tuple[int, int], Poly] = {}

    def power(i, k):
        p = powers.get((i, k))
        if p is None:
            p = images[i] if k == 1 else power(i, k - 1) * images[i]
            powers[(i, k)] = p
        return p

    acc: Dict[Exponent, Fraction] = {}
    for e, c in h._terms.items():
        term = None
        for i, x in enumerate(e):
            if x:
                term = power(i, x) if term is None else term * power(i, x)
        if term is None:
            kernels.axpy_inplace(acc, target.one()._terms, c, None)
        else:
            kernels.axpy_inplace(acc, term._terms, c, None)
    return Poly(target, acc)
