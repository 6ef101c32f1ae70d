import random

import networkx as nx
import pytest
from hypothesis import strategies as st

from zagreb.graph import Graph, build_graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return build_graph(len(index), [(index[u], index[v]) for u, v in h.edges()])


def random_graph(rng: random.Random, n_max: int = 50, no_isolated: bool = True) -> Graph:
    """A G(n, p) sample, with isolated vertices patched to a random neighbour."""
    n = rng.randint(2, n_max)
    p = rng.uniform(0.05, 0.9)
    edges = {(u, v) for v in range(n) for u in range(v) if rng.random() < p}
    if no_isolated:
        touched = {x for e in edges for x in e}
        for v in range(n):
            if v not in touched:
                u = rng.choice([t for t in range(n) if t != v])
                edges.add((min(u, v), max(u, v)))
                touched.update((u, v))
    return build_graph(n, sorted(edges))


@st.composite
def graphs(draw, min_n=2, max_n=12, no_isolated=True):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = {e for e, b in zip(pairs, bits) if b}
    if no_isolated:
        # attach every isolated vertex to its successor (or predecessor)
        touched = {x for e in edges for x in e}
        for v in range(n):
            if v not in touched:
                u = v + 1 if v + 1 < n else v - 1
                edges.add((min(u, v), max(u, v)))
                touched.update((u, v))
    return build_graph(n, sorted(edges))


@pytest.fixture
def rng():
    return random.Random(20240607)


# -- acceptance summary ----------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
