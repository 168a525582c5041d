"""Monomial orderings as integer weight matrices.

Every ordering is stored as a stack of integer rows; monomials are compared
by the lexicographic order of ``rows @ exponent``.  The rows must have rank
equal to the number of variables so that the comparison is total.  Rows
with negative leading entries give local variables (``x < 1``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from . import kernels
from .poly import Exponent, Poly, Term

Rows = Tuple[Tuple[int, ...], ...]


def matrix_rank(rows: Sequence[Sequence[int]]) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class MonomialOrdering:
    rows: Rows
    name: str = "matrix"

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise ValueError("an ordering needs at least one row")
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise ValueError("ragged ordering matrix")
        if matrix_rank(rows) != n:
            raise ValueError(f"ordering matrix has rank < {n}; comparison would not be total")

    @property
    def nvars(self) -> int:
        return len(self.rows[0])

    def key(self, exp: Exponent):
        return kernels.order_key(self.rows, exp)

    def compare(self, a: Exponent, b: Exponent) -> int:
        if len(a) != self.nvars or len(b) != self.nvars:
            raise ValueError("monomial length does not match the ordering")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def is_global(self) -> "GlobalityReport":
        zero = (0,) * self.nvars
        flags = []
        for i in range(self.nvars):
            e = [0] * self.nvars
            e[i] = 1
            flags.append(self.compare(tuple(e), zero) > 0)
        return GlobalityReport(tuple(flags))

    def leading_exp(self, f: Poly) -> Exponent:
        if not f:
            raise ValueError("leading term of the zero polynomial")
        return kernels.leading_exp(f._terms, self.rows)

    def leading_term(self, f: Poly) -> Term:
        e = self.leading_exp(f)
        return (f._terms[e], e)

    def sorted_exponents(self, f: Poly) -> List[Exponent]:
        return sorted(f._terms, key=self.key, reverse=True)

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class GlobalityReport:
    flags: Tuple[bool, ...]

    @property
    def all_global(self) -> bool:
        return all(self.flags)

    @property
    def local_vars(self) -> List[int]:
        return [i for i, g in enumerate(self.flags) if not g]


def _unit(n, i, s=1):
    r = [0] * n
    r[i] = s
    return tuple(r)


def lex(n: int) -> MonomialOrdering:
    return MonomialOrdering(tuple(_unit(n, i) for i in range(n)), "lex")


def degrevlex(n: int) -> MonomialOrdering:
    rows = [(1,) * n] + [_unit(n, i, -1) for i in range(n - 1, 0, -1)]
    return MonomialOrdering(tuple(rows), "degrevlex")


def neglex(n: int) -> MonomialOrdering:
    return MonomialOrdering(tuple(_unit(n, i, -1) for i in range(n)), "neglex")


def negdeglex(n: int) -> MonomialOrdering:
    rows = [(-1,) * n] + [_unit(n, i) for i in range(n - 1)]
    return MonomialOrdering(tuple(rows), "negdeglex")


def weighted(w: Sequence[int], tie: MonomialOrdering = None) -> MonomialOrdering:
    w = tuple(int(x) for x in w)
    tie = tie or degrevlex(len(w))
    if tie.nvars != len(w):
        raise ValueError("tie-break ordering has the wrong number of variables")
    return MonomialOrdering((w,) + tie.rows, f"weight({','.join(map(str, w))})")


def matrix(m: Sequence[Sequence[int]]) -> MonomialOrdering:
    return MonomialOrdering(tuple(tuple(r) for r in m), "matrix")


def block(parts: Sequence[Tuple[MonomialOrdering, Sequence[int]]], nvars: int = None) -> MonomialOrdering:
    """Block ordering: compare with ``parts[0]`` on its variables first, and so on.

    ``parts`` is a list of ``(ordering, variable indices)``; the index sets
    must partition ``range(nvars)``.
    """
    seen = [i for _, idx in parts for i in idx]
    n = nvars if nvars is not None else len(seen)
    if sorted(seen) != list(range(n)):
        raise ValueError("block variables must partition the ring's variables")
    rows = []
    for ordering, idx in parts:
        if ordering.nvars != len(idx):
            raise ValueError("block ordering size does not match its variables")
        for r in ordering.rows:
            full = [0] * n
            for j, i in enumerate(idx):
                full[i] = r[j]
            rows.append(tuple(full))
    name = "block(" + "; ".join(f"{o.name}:{list(idx)}" for o, idx in parts) + ")"
    return MonomialOrdering(tuple(rows), name)


def elimination(n: int, eliminate: Sequence[int]) -> MonomialOrdering:
    """degrevlex block ordering with ``eliminate`` before the other variables."""
    eliminate = sorted(eliminate)
    keep = [i for i in range(n) if i not in set(eliminate)]
    parts = []
    if eliminate:
        parts.append((degrevlex(len(eliminate)), eliminate))
    if keep:
        parts.append((degrevlex(len(keep)), keep))
    return block(parts, n)


def compare_monomials(ordering: MonomialOrdering, m1: Exponent, m2: Exponent) -> int:
    return ordering.compare(tuple(m1), tuple(m2))


def leading_term(ordering: MonomialOrdering, f: Poly) -> Term:
    return ordering.leading_term(f)


def is_global(ordering: MonomialOrdering) -> GlobalityReport:
    return ordering.is_global()


def bayer_matrix(w: Sequence[int], t_degree: int) -> MonomialOrdering:
    """Matrix ordering on (X_1..X_k, t) for Bayer-style homogenization.

    Row 1 is ``(w | t_degree)``, row 2 is ``(0..0 | -1)`` and the remaining
    rows are the unit vectors of X_1..X_{k-1}.  Requires ``w >= 0`` and
    ``w[-1] != 0``; callers reorder variables to arrange the latter.
    """
    w = tuple(int(x) for x in w)
    k = len(w)
    if t_degree not in (1, -1):
        raise ValueError("t_degree must be +1 or -1")
    if not any(w):
        raise ValueError("weight vector is zero")
    if any(x < 0 for x in w):
        raise ValueError("weight vector has negative entries")
    if w[-1] == 0:
        raise ValueError("last weight must be nonzero (reorder the variables first)")
    rows = [w + (t_degree,), (0,) * k + (-1,)]
    rows += [_unit(k + 1, i) for i in range(k - 1)]
    return MonomialOrdering(tuple(rows), f"bayer({','.join(map(str, w))};{t_degree})")
