"""Degree intervals [a, a+p]: goodness, collision scans and equality structure.

A degree interval is *good* when every graph whose degrees lie in it satisfies
M1/n <= M2/m.  Inside a good interval the sign of ``f`` is non-negative, so
equality forces every pair of edge classes present in the graph to be an
f-zero pair: either a product collision (ij = kl) or a harmonic collision
((i+j)/ij = (k+l)/kl).  The scans below enumerate both kinds exhaustively.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from math import gcd
from typing import Iterable, Optional

from .graph import (
    Graph,
    GraphError,
    Regularity,
    RegularityClass,
    classify_regularity,
    connected_components,
    degree_set,
    induced_subgraph,
)
from .invariants import DegenerateGraphError

Quad = tuple[int, int, int, int]


def threshold(p: int) -> int:
    """Smallest a for which [a, a+p] is good by the general rule, p(p-1)/2."""
    return p * (p - 1) // 2


def is_good_interval(a: int, p: int) -> bool:
    if a < 1 or p < 0:
        raise ValueError(f"interval needs a >= 1 and p >= 0, got a={a}, p={p}")
    return 2 * a >= p * (p - 1) or (a, p) == (1, 3)


@dataclass(frozen=True)
class IntervalSpec:
    a: int
    p: int

    def __post_init__(self):
        if self.a < 1 or self.p < 0:
            raise ValueError(f"interval needs a >= 1 and p >= 0, got a={self.a}, p={self.p}")

    @property
    def hi(self) -> int:
        return self.a + self.p

    @property
    def is_good(self) -> bool:
        return is_good_interval(self.a, self.p)

    def __contains__(self, d: int) -> bool:
        return self.a <= d <= self.hi

    def __str__(self) -> str:
        return f"[{self.a},{self.hi}]"


def _pairs(lo: int, hi: int) -> list[tuple[int, int]]:
    return [(x, y) for x in range(lo, hi + 1) for y in range(x, hi + 1)]


# -- sign scan -------------------------------------------------------------------

def scan_f_sign(degrees: Iterable[int]) -> Optional[Quad]:
    """Lexicographically smallest ``(i, j, k, l)`` drawn from the set with f < 0.

    Pairs are ``i <= j`` and ``k <= l``.  ``None`` means f is non-negative on
    the whole set, which is enough for the set to be good.
    """
    s = sorted(set(degrees))
    if not s or s[0] < 1:
        raise ValueError("degree set must be non-empty and positive")
    pairs = [(i, j, i * j, i + j) for i, j in combinations(s, 2)] + [(d, d, d * d, 2 * d) for d in s]
    pairs.sort()
    # f is symmetric in the two pairs, so A < B suffices and A+B is the smaller quadruple
    for idx, (i, j, ij, sij) in enumerate(pairs):
        for k, l, kl, skl in pairs[idx + 1:]:
            if ij == kl:
                continue
            t = ij * skl - kl * sij
            if t != 0 and (ij > kl) != (t > 0):
                return (i, j, k, l)
    return None


# -- collisions ------------------------------------------------------------------

class CollisionKind(Enum):
    PRODUCT = "product"
    HARMONIC = "harmonic"


@dataclass(frozen=True)
class CollisionReport:
    kind: CollisionKind
    tuples: tuple[Quad, ...] = field(default_factory=tuple)

    def __bool__(self) -> bool:
        return bool(self.tuples)

    def __len__(self) -> int:
        return len(self.tuples)


def _collisions_by_key(pairs, key) -> tuple[Quad, ...]:
    groups = defaultdict(list)
    for pr in pairs:
        groups[key(*pr)].append(pr)
    out = []
    for grp in groups.values():
        for (x, y), (u, v) in combinations(sorted(grp), 2):
            out.append((x, y, u, v))
    return tuple(sorted(out))


def find_product_collisions(a: int, p: int) -> CollisionReport:
    """All ``(x, y, u, v)`` in [a, a+p] with xy = uv and (x, y) < (u, v)."""
    tuples = _collisions_by_key(_pairs(a, a + p), lambda x, y: x * y)
    return CollisionReport(CollisionKind.PRODUCT, tuples)


def harmonic_discriminant(x: int, y: int, u: int, v: int) -> int:
    """``(u+v)xy - (x+y)uv``; zero iff 1/x + 1/y = 1/u + 1/v."""
    return (u + v) * x * y - (x + y) * u * v


def _harmonic_key(x: int, y: int) -> tuple[int, int]:
    s, q = x + y, x * y
    g = gcd(s, q)
    return s // g, q // g


def find_harmonic_collisions(a: int, p: int) -> CollisionReport:
    """All ``(x, y, u, v)`` in [a, a+p] with (x+y)/xy = (u+v)/uv and (x, y) < (u, v)."""
    tuples = _collisions_by_key(_pairs(a, a + p), _harmonic_key)
    return CollisionReport(CollisionKind.HARMONIC, tuples)


def predicted_product_collisions(a: int, p: int) -> Optional[tuple[Quad, ...]]:
    """Collisions the theory predicts for [a, a+p], or None when it is silent."""
    if (a, p) == (1, 3):
        return ((1, 4, 2, 2),)
    if 2 * a >= p * (p - 1):
        return ()
    return None


def predicted_harmonic_collisions(a: int, p: int) -> Optional[tuple[Quad, ...]]:
    if (a, p) == (1, 3):
        return ()
    if 2 * a < p * (p - 1):
        return None
    if p % 2 == 1 and a == threshold(p):
        mid = (p * p - 1) // 2
        return ((threshold(p), p * (p + 1) // 2, mid, mid),)
    return ()


def product_sum_order_violations(p: int) -> list[tuple[int, int]]:
    """Pairs u <= v in [x, x+p], x = p(p-1)/2, where ``uv > xy`` and ``u+v >= x+y`` disagree.

    The endpoint pair itself is skipped: there uv = xy and u+v = x+y.
    """
    x = threshold(p)
    y = x + p
    bad = []
    for u, v in _pairs(x, y):
        if (u, v) == (x, y):
            continue
        if (u * v > x * y) != (u + v >= x + y):
            bad.append((u, v))
    return bad


# -- equality structure -----------------------------------------------------------

class StructureCase(Enum):
    REGULAR = "RegularCase"
    BIREGULAR_CLASS1 = "BiregularClass1Case"
    MIXED_REGULAR_BIREGULAR = "MixedRegularBiregularCase"
    STARS_AND_CYCLES = "StarsAndCyclesCase"
    NOT_EQUALITY = "NotEquality"


@dataclass(frozen=True)
class EqualityStructure:
    verdict: StructureCase
    evidence: tuple[RegularityClass, ...]


def component_classes(g: Graph) -> tuple[RegularityClass, ...]:
    comps = connected_components(g)
    if len(comps) == 1:
        return (classify_regularity(g),)
    return tuple(classify_regularity(induced_subgraph(g, c)) for c in comps)


def _is_star4(c: RegularityClass) -> bool:
    # a connected graph with only 1-4 edges is exactly K_{1,4}
    return c.kind is Regularity.BIREGULAR_CLASS1 and c.degrees == (1, 4)


def classify_equality_structure(g: Graph, interval: IntervalSpec) -> EqualityStructure:
    """Decide structurally whether g is one of the equality shapes for a good interval.

    Checks, in order: all one regular degree; one biregular class-1 degree pair;
    for odd p with a = p(p-1)/2, a mix of ((p^2-1)/2)-regular components and
    class-1 components on degrees p(p-1)/2 and p(p+1)/2; for [1, 4], a mix of
    K_{1,4} stars and cycles.  Anything else is ``NotEquality``.
    """
    if not interval.is_good:
        raise GraphError(f"interval {interval} is not good")
    ds = degree_set(g)
    if g.n == 0 or ds[0] == 0:
        raise DegenerateGraphError("graph has isolated vertices")
    outside = [d for d in ds if d not in interval]
    if outside:
        raise GraphError(f"degrees {outside} lie outside {interval}")

    evidence = component_classes(g)
    if len(ds) == 1:
        return EqualityStructure(StructureCase.REGULAR, evidence)
    if len(ds) == 2 and all(c.kind is Regularity.BIREGULAR_CLASS1 for c in evidence):
        return EqualityStructure(StructureCase.BIREGULAR_CLASS1, evidence)

    a, p = interval.a, interval.p
    if p % 2 == 1 and a == threshold(p):
        mid = (p * p - 1) // 2
        lohi = (threshold(p), p * (p + 1) // 2)
        regular = [c.kind is Regularity.REGULAR and c.degrees == (mid,) for c in evidence]
        bireg = [c.kind is Regularity.BIREGULAR_CLASS1 and c.degrees == lohi for c in evidence]
        if all(r or b for r, b in zip(regular, bireg)) and any(regular) and any(bireg):
            return EqualityStructure(StructureCase.MIXED_REGULAR_BIREGULAR, evidence)

    if (a, p) == (1, 3):
        stars = [_is_star4(c) for c in evidence]
        cycles = [c.kind is Regularity.REGULAR and c.degrees == (2,) for c in evidence]
        if all(s or c for s, c in zip(stars, cycles)) and any(stars) and any(cycles):
            return EqualityStructure(StructureCase.STARS_AND_CYCLES, evidence)

    return EqualityStructure(StructureCase.NOT_EQUALITY, evidence)
