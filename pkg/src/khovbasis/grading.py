"""Gradings of tag rings by finitely generated abelian groups."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .poly import Exponent, Poly, PolyRing

DeltaDegree = Tuple[int, ...]


@dataclass(frozen=True)
class DeltaGroup:
    """Z^free_rank x Z/n_1 x ... x Z/n_s; degrees list free coordinates first."""

    free_rank: int = 0
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(n) for n in self.torsion))
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        if any(n < 2 for n in self.torsion):
            raise ValueError("torsion orders must be at least 2")

    @property
    def length(self) -> int:
        return self.free_rank + len(self.torsion)

    @property
    def is_trivial(self) -> bool:
        return self.length == 0

    def zero(self) -> DeltaDegree:
        return (0,) * self.length

    def reduce(self, d: Sequence[int]) -> DeltaDegree:
        d = tuple(int(x) for x in d)
        if len(d) != self.length:
            raise ValueError(f"degree {d} does not match group of length {self.length}")
        a = self.free_rank
        return d[:a] + tuple(x % n for x, n in zip(d[a:], self.torsion))

    def add(self, a: DeltaDegree, b: DeltaDegree) -> DeltaDegree:
        return self.reduce(tuple(x + y for x, y in zip(a, b)))

    def scale(self, a: DeltaDegree, k: int) -> DeltaDegree:
        return self.reduce(tuple(k * x for x in a))

    def combine(self, degrees: Sequence[DeltaDegree], exp: Sequence[int]) -> DeltaDegree:
        acc = [0] * self.length
        for d, e in zip(degrees, exp):
            if e:
                for j, x in enumerate(d):
                    acc[j] += e * x
        return self.reduce(acc)


TRIVIAL = DeltaGroup()


@dataclass(frozen=True)
class DeltaGrading:
    """A Delta-grading of a list of generators: one degree per generator."""

    group: DeltaGroup
    degrees: Tuple[DeltaDegree, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(self.group.reduce(d) for d in self.degrees))

    @classmethod
    def trivial(cls, k: int) -> "DeltaGrading":
        return cls(TRIVIAL, ((),) * k)

    def extended(self, more: Sequence[DeltaDegree]) -> "DeltaGrading":
        return DeltaGrading(self.group, self.degrees + tuple(more))


@dataclass(frozen=True)
class GradedTagRing:
    ring: PolyRing
    group: DeltaGroup
    delta_degrees: Tuple[DeltaDegree, ...]
    gamma_degrees: Optional[Tuple[Tuple[int, ...], ...]] = None
    gamma_key: Optional[object] = field(default=None, compare=False)

    def __post_init__(self):
        k = self.ring.nvars
        object.__setattr__(self, "delta_degrees", tuple(self.group.reduce(d) for d in self.delta_degrees))
        if len(self.delta_degrees) != k:
            raise ValueError("one Delta-degree per tag variable required")
        if self.gamma_degrees is not None:
            g = tuple(tuple(int(x) for x in v) for v in self.gamma_degrees)
            object.__setattr__(self, "gamma_degrees", g)
            if len(g) != k:
                raise ValueError("one Gamma-degree per tag variable required")

    def delta_of(self, e: Exponent) -> DeltaDegree:
        return self.group.combine(self.delta_degrees, e)

    def gamma_of(self, e: Exponent) -> Tuple[int, ...]:
        if self.gamma_degrees is None:
            raise ValueError("no Gamma-grading on this tag ring")
        r = len(self.gamma_degrees[0]) if self.gamma_degrees else 0
        acc = [0] * r
        for d, x in zip(self.gamma_degrees, e):
            if x:
                for j, v in enumerate(d):
                    acc[j] += x * v
        return tuple(acc)


def tag_ring(k: int, grading: DeltaGrading, gammas=None, prefix: str = "X", gamma_key=None) -> GradedTagRing:
    ring = PolyRing(tuple(f"{prefix}{i + 1}" for i in range(k)))
    return GradedTagRing(ring, grading.group, grading.degrees[:k], gammas, gamma_key)


def delta_degree(ring: GradedTagRing, h: Poly) -> Optional[DeltaDegree]:
    """Common Delta-degree of the terms of ``h``, or None if ``h`` is inhomogeneous."""
    if not h:
        raise ValueError("degree of the zero polynomial")
    degs = {ring.delta_of(e) for e in h._terms}
    return degs.pop() if len(degs) == 1 else None


def homogeneous_components(ring: GradedTagRing, h: Poly, which: str = "delta") -> List[Poly]:
    if which not in ("delta", "gamma", "both"):
        raise ValueError(f"unknown grading selector {which!r}")
    groups: Dict[tuple, Dict[Exponent, object]] = {}
    for e, c in h._terms.items():
        if which == "delta":
            key = (ring.delta_of(e),)
        elif which == "gamma":
            key = (ring.gamma_of(e),)
        else:
            key = (ring.gamma_of(e), ring.delta_of(e))
        groups.setdefault(key, {})[e] = c

    def sort_key(k):
        if which in ("gamma", "both") and ring.gamma_key is not None:
            return (ring.gamma_key(k[0]), k)
        return k

    return [Poly(h.ring, groups[k]) for k in sorted(groups, key=sort_key)]


@dataclass
class GroupRingEncoding:
    """Polynomial model of the group ring K[Delta] used inside eliminations.

    Torsion factor Z/n becomes a variable g with relation g^n - 1.  A free
    factor becomes a variable g, plus an inverse variable with g*gbar - 1
    only when some degree has a negative entry in that coordinate.
    """

    group: DeltaGroup
    names: List[str]
    slots: List[Tuple[int, Optional[int]]]  # per coordinate: (pos var, neg var or None)

    @classmethod
    def build(cls, group: DeltaGroup, degrees: Sequence[DeltaDegree], prefix: str = "_g") -> "GroupRingEncoding":
        names: List[str] = []
        slots: List[Tuple[int, Optional[int]]] = []
        for j in range(group.length):
            names.append(f"{prefix}{j}")
            pos = len(names) - 1
            neg = None
            if j < group.free_rank and any(d[j] < 0 for d in degrees):
                names.append(f"{prefix}{j}bar")
                neg = len(names) - 1
            slots.append((pos, neg))
        return cls(group, names, slots)

    @property
    def nvars(self) -> int:
        return len(self.names)

    def exponent(self, d: DeltaDegree) -> List[int]:
        d = self.group.reduce(d)
        out = [0] * self.nvars
        for j, x in enumerate(d):
            pos, neg = self.slots[j]
            if x >= 0:
                out[pos] = x
            elif neg is None:
                raise ValueError(f"degree {d} needs an inverse variable that was not allocated")
            else:
                out[neg] = -x
        return out

    def relations(self, ring: PolyRing, offset: int) -> List[Poly]:
        rels = []
        a = self.group.free_rank
        for j, (pos, neg) in enumerate(self.slots):
            g = ring.var(offset + pos)
            if j >= a:
                rels.append(g ** self.group.torsion[j - a] - 1)
            elif neg is not None:
                rels.append(g * ring.var(offset + neg) - 1)
        return rels
