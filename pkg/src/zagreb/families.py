"""Graph families that attain (or break) M1/n = M2/m.

``build_gxyzw`` chains x copies of K_{2,5}, a trimmed K_{2,z}, a path on 2y
vertices and w spliced copies of K_{3,3} into one connected graph with degrees
{2, 3, 5, z}.  ``solve_params`` picks x and w so that the result attains
equality.  The catalog covers the small classical equality families plus the
cycle-plus-star violators.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .graph import (
    Graph,
    GraphError,
    circulant_regular,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    edge_class_counts,
    is_connected,
    path,
    star,
    subdivision,
)
from .invariants import Verdict, m1, m2


class ConstructionError(RuntimeError):
    """A builder postcondition failed; the construction itself is wrong."""


@dataclass(frozen=True)
class FamilyParams:
    x: int
    y: int
    z: int
    w: int

    def __post_init__(self):
        if self.x < 1 or self.y < 1 or self.w < 1:
            raise ValueError(f"x, y, w must be >= 1, got {self}")
        if self.z < 2:
            raise ValueError(f"z must be >= 2 (K_2,1 degenerates), got z={self.z}")

    @property
    def degree_collision(self) -> bool:
        """z coincides with one of the fixed degrees 2, 3, 5."""
        return self.z in (2, 3, 5)


class _Builder:
    def __init__(self):
        self.nbrs: list[list[int]] = []

    def new(self, k: int = 1) -> list[int]:
        n = len(self.nbrs)
        self.nbrs.extend([] for _ in range(k))
        return list(range(n, n + k))

    def add(self, u: int, v: int) -> None:
        self.nbrs[u].append(v)
        self.nbrs[v].append(u)

    def remove(self, u: int, v: int) -> None:
        try:
            self.nbrs[u].remove(v)
            self.nbrs[v].remove(u)
        except ValueError:
            raise ConstructionError(f"edge ({u}, {v}) not present") from None

    def graph(self) -> Graph:
        adjacency = []
        for u, nb in enumerate(self.nbrs):
            t = tuple(sorted(nb))
            if len(set(t)) != len(t) or u in t:
                raise ConstructionError(f"vertex {u} has a repeated neighbour or a loop")
            adjacency.append(t)
        return Graph(len(adjacency), tuple(adjacency))


def _assemble(params: FamilyParams) -> Graph:
    x, y, z, w = params.x, params.y, params.z, params.w
    b = _Builder()

    # x copies of K_{2,5}, consecutive copies linked by an edge swap
    u1, u2, vs = [], [], []
    for _ in range(x):
        c1, c2 = b.new(2)
        v = b.new(5)
        for t in v:
            b.add(c1, t)
            b.add(c2, t)
        u1.append(c1)
        u2.append(c2)
        vs.append(v)
    for i in range(x - 1):
        b.remove(u2[i], vs[i][4])
        b.remove(u1[i + 1], vs[i + 1][0])
        b.add(u2[i], vs[i + 1][0])
        b.add(u1[i + 1], vs[i][4])
    # open both ends of the chain: hub attaches at the front, path and r at the back
    b.remove(u2[-1], vs[-1][4])
    b.remove(u1[0], vs[0][0])

    # K_{2,z} minus t2-p1 and t1-pz
    t1, t2 = b.new(2)
    ps = b.new(z)
    for pv in ps:
        b.add(t1, pv)
        b.add(t2, pv)
    b.remove(t2, ps[0])
    b.remove(t1, ps[-1])

    # path on 2y vertices from v5 of the last copy to p1
    qs = b.new(2 * y)
    b.add(vs[-1][4], qs[0])
    for s_, t_ in zip(qs, qs[1:]):
        b.add(s_, t_)
    b.add(qs[-1], ps[0])

    # degree-2 vertex between u2 of the last copy and t1
    (r,) = b.new()
    b.add(u2[-1], r)
    b.add(r, t1)

    t, s = b.new(2)
    b.add(t2, t)
    b.add(ps[-1], s)
    b.add(t, s)

    # w copies of K_{3,3}; a1-b1 and a3-b3 become paths a1-A-a3 and b1-B-b3
    prev = s
    for _ in range(w):
        a = b.new(3)
        bb = b.new(3)
        for p_ in a:
            for q_ in bb:
                b.add(p_, q_)
        A, B = b.new(2)
        b.remove(a[0], bb[0])
        b.remove(a[2], bb[2])
        b.add(a[0], A)
        b.add(A, a[2])
        b.add(bb[0], B)
        b.add(B, bb[2])
        b.add(prev, A)
        prev = B

    (hub,) = b.new()
    b.add(hub, prev)
    b.add(hub, u1[0])
    b.add(hub, vs[0][0])
    return b.graph()


def expected_degrees(params: FamilyParams) -> Counter:
    x, y, z, w = params.x, params.y, params.z, params.w
    out: Counter = Counter()
    out[5] += 2 * x
    out[3] += 8 * w + 2
    out[2] += 5 * x + 2 * y + z + 2
    out[z] += 2
    return out


def expected_edge_classes(params: FamilyParams) -> Counter:
    x, y, z, w = params.x, params.y, params.z, params.w
    out: Counter = Counter()
    out[(2, z)] += 2 * z
    out[(2, 5)] += 10 * x - 1
    out[(2, 3)] += 3
    out[(2, 2)] += 2 * y + 1
    out[(3, 5)] += 1
    out[(3, 3)] += 12 * w + 1
    return out


def closed_form(params: FamilyParams) -> dict[str, int]:
    """n, m, M1, M2 of G(x, y, z, w) from the degree and edge-class counts."""
    x, y, z, w = params.x, params.y, params.z, params.w
    return {
        "n": 7 * x + 2 * y + z + 8 * w + 6,
        "m": 10 * x + 2 * y + 2 * z + 12 * w + 5,
        "M1": 2 * (35 * x + 4 * y + z * z + 2 * z + 36 * w + 13),
        "M2": 100 * x + 8 * y + 4 * z * z + 108 * w + 36,
    }


def gap_polynomial(params: FamilyParams) -> int:
    """m*M1 - n*M2 of G(x, y, z, w) as an explicit polynomial."""
    x, y, z, w = params.x, params.y, params.z, params.w
    return (
        -86 - 242 * x - 28 * y + 36 * z - 264 * w - 36 * x * y + 80 * x * z + 4 * x * w
        + 16 * y * z - 40 * y * w + 84 * z * w - 8 * x * z * z - 4 * y * z * z
        - 8 * w * z * z - 6 * z * z
    )


def build_gxyzw(params: FamilyParams) -> Graph:
    """Build G(x, y, z, w) and check it against every closed-form count."""
    g = _assemble(params)
    cf = closed_form(params)
    if g.n != cf["n"] or g.m != cf["m"]:
        raise ConstructionError(f"n, m = {g.n}, {g.m}; expected {cf['n']}, {cf['m']}")
    if Counter(g.degrees()) != expected_degrees(params):
        raise ConstructionError("degree multiset mismatch")
    if Counter(edge_class_counts(g)) != expected_edge_classes(params):
        raise ConstructionError(f"edge classes {edge_class_counts(g)} mismatch")
    if not is_connected(g):
        raise ConstructionError("construction is disconnected")
    return g


def _eq5_terms(y: int, z: int, w: int) -> tuple[int, int]:
    num = (132 * w - 42 * z * w + 4 * z * z * w + 14 * y - 8 * y * z + 20 * y * w
           + 2 * y * z * z + 3 * z * z - 18 * z + 43)
    den = -121 - 18 * y + 2 * w + 40 * z - 4 * z * z
    return num, den


def solve_params(y: int, z: int, verify_graph: bool = False) -> FamilyParams:
    """Choose w so the x-denominator is 1, then x equals the numerator.

    The equality m*M1 = n*M2 is always checked through the closed forms; with
    ``verify_graph`` the graph is also built and measured directly.
    """
    if y < 1 or z < 2:
        raise ValueError(f"need y >= 1 and z >= 2, got y={y}, z={z}")
    w = 61 + 9 * y - 20 * z + 2 * z * z
    num, den = _eq5_terms(y, z, w)
    if den != 1:
        raise ConstructionError(f"denominator is {den}, expected 1 (y={y}, z={z}, w={w})")
    if num < 1:
        raise ConstructionError(f"x = {num} is not positive (y={y}, z={z})")
    params = FamilyParams(num, y, z, w)
    cf = closed_form(params)
    if cf["m"] * cf["M1"] != cf["n"] * cf["M2"] or gap_polynomial(params) != 0:
        raise ConstructionError(f"{params} does not attain equality")
    if verify_graph:
        g = build_gxyzw(params)
        if g.m * m1(g) != g.n * m2(g):
            raise ConstructionError(f"built graph for {params} does not attain equality")
    return params


# -- catalog -----------------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    name: str
    params: tuple[int, ...]
    expected_verdict: Verdict


def _subdivided_regular(r, base_n):
    if r < 1:
        raise GraphError("subdivision-of-regular needs r >= 1")
    return subdivision(circulant_regular(r, base_n))


def _equal_complete_union(p, count):
    if p < 2 or count < 1:
        raise GraphError("equal-complete-union needs p >= 2 and count >= 1")
    return disjoint_union(*[complete(p)] * count)


def _two_paths(p, q):
    if (p, q) not in ((2, 2), (3, 3)):
        raise GraphError("two-paths is defined for (2, 2) and (3, 3) only")
    return disjoint_union(path(p), path(q))


def _cycle_plus_star_b(p, b):
    if b < 5:
        raise GraphError("cycle-plus-star-b needs b >= 5")
    return disjoint_union(cycle(p), star(b))


CATALOG = {
    "subdivision-of-regular": (2, _subdivided_regular),
    "equal-complete-union": (2, _equal_complete_union),
    "complete3-plus-cycle": (1, lambda q: disjoint_union(complete(3), cycle(q))),
    "two-paths": (2, _two_paths),
    "cycle-plus-K22": (1, lambda p: disjoint_union(cycle(p), complete_bipartite(2, 2))),
    "cycle-plus-star4": (1, lambda p: disjoint_union(cycle(p), star(4))),
    "cycle-plus-star-b": (2, _cycle_plus_star_b),
}


def catalog_entry(name: str, *params: int) -> CatalogEntry:
    if name not in CATALOG:
        raise KeyError(f"unknown family {name!r}; known: {', '.join(CATALOG)}")
    arity = CATALOG[name][0]
    if len(params) != arity:
        raise GraphError(f"{name} takes {arity} parameter(s), got {len(params)}")
    verdict = Verdict.STRICTLY_GREATER if name == "cycle-plus-star-b" else Verdict.EQUAL
    return CatalogEntry(name, tuple(params), verdict)


def catalog_generate(entry: CatalogEntry) -> Graph:
    try:
        arity, make = CATALOG[entry.name]
    except KeyError:
        raise KeyError(f"unknown family {entry.name!r}") from None
    if len(entry.params) != arity:
        raise GraphError(f"{entry.name} takes {arity} parameter(s), got {len(entry.params)}")
    return make(*entry.params)
