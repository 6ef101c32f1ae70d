"""Simple undirected graphs, standard generators and degree bookkeeping.

Vertices are dense integers ``0..n-1``.  A :class:`Graph` is immutable once
built; every function here is pure.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Invalid graph construction or generator parameters."""


@dataclass(frozen=True, slots=True)
class Graph:
    """Vertex count plus per-vertex sorted neighbour tuples.

    The constructor trusts its input; use :func:`build_graph` for anything
    that comes from outside the package.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    m: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "m", sum(map(len, self.adjacency)) // 2)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.adjacency]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, nb in enumerate(self.adjacency):
            for v in nb:
                if v > u:
                    yield u, v

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate an edge list and return the graph.

    Raises :class:`GraphError` on out-of-range endpoints, self-loops and
    duplicate edges (duplicates are never silently merged).
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = (int(t) for t in e)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if v in nbrs[u]:
            raise GraphError(f"duplicate edge ({min(u, v)}, {max(u, v)})")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


# -- generators --------------------------------------------------------------

def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


def complete(p: int) -> Graph:
    _require(p >= 1, f"complete graph needs p >= 1, got {p}")
    return build_graph(p, combinations(range(p), 2))


def cycle(p: int) -> Graph:
    _require(p >= 3, f"cycle needs p >= 3, got {p}")
    return build_graph(p, [(i, (i + 1) % p) for i in range(p)])


def path(p: int) -> Graph:
    """Path on ``p`` vertices (``p - 1`` edges)."""
    _require(p >= 1, f"path needs p >= 1, got {p}")
    return build_graph(p, [(i, i + 1) for i in range(p - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}; vertices ``0..a-1`` form the first part."""
    _require(a >= 1 and b >= 1, f"complete bipartite needs a, b >= 1, got ({a}, {b})")
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(k: int) -> Graph:
    """K_{1,k} with the centre at vertex 0."""
    _require(k >= 1, f"star needs k >= 1, got {k}")
    return complete_bipartite(1, k)


def circulant_regular(r: int, n: int) -> Graph:
    """An r-regular circulant graph on n vertices.

    Offsets ``1..r//2``, plus the antipodal offset ``n/2`` when r is odd
    (which then requires even n).
    """
    _require(0 <= r < n, f"need 0 <= r < n, got r={r}, n={n}")
    _require(r % 2 == 0 or n % 2 == 0, f"odd r={r} needs even n, got n={n}")
    edges = set()
    offsets = list(range(1, r // 2 + 1)) + ([n // 2] if r % 2 else [])
    for i in range(n):
        for d in offsets:
            j = (i + d) % n
            edges.add((min(i, j), max(i, j)))
    return build_graph(n, sorted(edges))


def disjoint_union(*graphs: Graph) -> Graph:
    """Union with each graph's vertices shifted past the previous ones."""
    adjacency: list[tuple[int, ...]] = []
    offset = 0
    for g in graphs:
        adjacency.extend(tuple(v + offset for v in nb) for nb in g.adjacency)
        offset += g.n
    return Graph(offset, tuple(adjacency))


def subdivision(g: Graph) -> Graph:
    """Insert a new degree-2 vertex on every edge; new vertices follow the old."""
    edges = []
    for k, (u, v) in enumerate(g.edges()):
        mid = g.n + k
        edges.append((u, mid))
        edges.append((v, mid))
    return build_graph(g.n + g.m, edges)


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph on ``vertices``, relabelled in the given order."""
    index = {v: i for i, v in enumerate(vertices)}
    adjacency = tuple(
        tuple(sorted(index[w] for w in g.adjacency[v] if w in index)) for v in vertices
    )
    return Graph(len(vertices), adjacency)


# -- degree bookkeeping --------------------------------------------------------

def degree_sequence(g: Graph) -> list[int]:
    """Degrees sorted ascending (the multiset, as a list)."""
    return sorted(g.degrees())


def degree_set(g: Graph) -> list[int]:
    return sorted(set(g.degrees()))


def edge_class_counts(g: Graph) -> dict[tuple[int, int], int]:
    """Map ``(i, j)``, ``i <= j``, to the number of edges joining degrees i and j."""
    deg = g.degrees()
    counts: Counter[tuple[int, int]] = Counter()
    for u, nb in enumerate(g.adjacency):
        du = deg[u]
        for v in nb:
            dv = deg[v]
            if du < dv or (du == dv and u < v):
                counts[(du, dv)] += 1
    return dict(sorted(counts.items()))


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack = [s]
        comp = []
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise GraphError("connectivity is undefined for the empty graph")
    return len(connected_components(g)) == 1


# -- regularity classification -------------------------------------------------

class Regularity(Enum):
    REGULAR = "Regular"
    BIREGULAR_CLASS1 = "BiregularClass1"
    BIREGULAR_CLASS2 = "BiregularClass2"
    TRIREGULAR_CLASS1 = "TriregularClass1"
    TRIREGULAR_CLASS2 = "TriregularClass2"
    OTHER = "Other"


@dataclass(frozen=True)
class RegularityClass:
    kind: Regularity
    degrees: tuple[int, ...]

    @property
    def is_class1(self) -> bool:
        return self.kind in (Regularity.BIREGULAR_CLASS1, Regularity.TRIREGULAR_CLASS1)

    def __str__(self) -> str:
        return f"{self.kind.value}({','.join(map(str, self.degrees))})"

    @classmethod
    def parse(cls, text: str) -> RegularityClass:
        name, _, rest = text.partition("(")
        degrees = tuple(int(t) for t in rest.rstrip(")").split(",") if t)
        return cls(Regularity(name), degrees)


def classify_regularity(g: Graph) -> RegularityClass:
    if g.n < 1:
        raise GraphError("classification needs at least one vertex")
    deg = g.degrees()
    ds = tuple(sorted(set(deg)))
    if len(ds) == 1:
        return RegularityClass(Regularity.REGULAR, ds)
    if len(ds) > 3:
        return RegularityClass(Regularity.OTHER, ds)
    same = any(deg[u] == deg[v] for u, v in g.edges())
    if len(ds) == 2:
        kind = Regularity.BIREGULAR_CLASS2 if same else Regularity.BIREGULAR_CLASS1
    else:
        kind = Regularity.TRIREGULAR_CLASS2 if same else Regularity.TRIREGULAR_CLASS1
    return RegularityClass(kind, ds)
