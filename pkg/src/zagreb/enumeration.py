"""Exhaustive enumeration of small labelled graphs and equality surveys.

A labelled graph on n vertices is an integer mask over the upper triangle,
with pair (i, j), i < j, at bit ``j(j-1)/2 + i`` (the graph6 column order).
Masks are scanned in ascending order in fixed-size chunks; numpy filters each
chunk on degree bounds and connectivity.  Chunks whose fixed high bits already
exceed the maximum degree are skipped outright.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator, Optional

import numpy as np

from .graph import Graph, RegularityClass, classify_regularity
from .intervals import EqualityStructure, IntervalSpec, StructureCase, classify_equality_structure
from .invariants import Verdict, compare

MAX_N = 8
_CHUNK_BITS = 18


class Dedup(Enum):
    NONE = "none"
    CANONICAL = "canonical"


@dataclass(frozen=True)
class EnumerationSpec:
    n: int
    min_degree: int = 0
    max_degree: Optional[int] = None
    connected_only: bool = False
    dedup: Dedup = Dedup.NONE

    def __post_init__(self):
        if not 1 <= self.n <= MAX_N:
            raise ValueError(f"n must be in [1, {MAX_N}], got {self.n}")
        if self.max_degree is None:
            object.__setattr__(self, "max_degree", self.n - 1)
        if not 0 <= self.min_degree <= self.max_degree <= self.n - 1:
            raise ValueError(
                f"need 0 <= min_degree <= max_degree <= n-1, got "
                f"{self.min_degree}, {self.max_degree} for n={self.n}"
            )


def pair_bit(i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


@lru_cache(maxsize=None)
def _pair_list(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for j in range(1, n) for i in range(j))


@lru_cache(maxsize=None)
def _bits_of(width: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(v for v in range(width) if b >> v & 1) for b in range(1 << width))


def graph_to_mask(g: Graph) -> int:
    mask = 0
    for u, v in g.edges():
        mask |= 1 << pair_bit(u, v)
    return mask


def graph_from_mask(n: int, mask: int) -> Graph:
    adjacency = tuple(
        tuple(u for u in range(n) if u != v and mask >> pair_bit(u, v) & 1) for v in range(n)
    )
    return Graph(n, adjacency)


# -- chunked mask filtering ---------------------------------------------------------

def _chunk_survivors(spec: EnumerationSpec, start: int, size: int) -> tuple[np.ndarray, np.ndarray]:
    """Masks in [start, start+size) meeting the spec, plus their neighbour bitmasks."""
    n = spec.n
    masks = np.arange(start, start + size, dtype=np.uint32)
    nbr = np.zeros((n, size), dtype=np.uint16)
    deg = np.zeros((n, size), dtype=np.uint8)
    for i, j in _pair_list(n):
        bit = ((masks >> np.uint32(pair_bit(i, j))) & np.uint32(1)).astype(np.uint16)
        nbr[i] |= bit << np.uint16(j)
        nbr[j] |= bit << np.uint16(i)
        deg[i] += bit.astype(np.uint8)
        deg[j] += bit.astype(np.uint8)
    keep = np.all((deg >= spec.min_degree) & (deg <= spec.max_degree), axis=0)
    if spec.connected_only and n > 1:
        reach = np.ones(size, dtype=np.uint16)
        for _ in range(n - 1):
            grown = reach.copy()
            for v in range(n):
                grown |= np.where((reach >> np.uint16(v)) & np.uint16(1), nbr[v], np.uint16(0))
            reach = grown
        keep &= reach == np.uint16((1 << n) - 1)
    return masks[keep], nbr[:, keep]


def _chunks(spec: EnumerationSpec) -> list[tuple[int, int]]:
    total_bits = spec.n * (spec.n - 1) // 2
    low = min(total_bits, _CHUNK_BITS)
    size = 1 << low
    pairs = _pair_list(spec.n)
    out = []
    for high in range(1 << (total_bits - low)):
        start = high << low
        # prune on degrees already forced by the fixed high bits
        deg = [0] * spec.n
        for t in range(low, total_bits):
            if start >> t & 1:
                i, j = pairs[t]
                deg[i] += 1
                deg[j] += 1
        if max(deg) <= spec.max_degree:
            out.append((start, size))
    return out


def _iter_masks(spec: EnumerationSpec) -> Iterator[tuple[int, tuple[int, ...]]]:
    for start, size in _chunks(spec):
        masks, nbr = _chunk_survivors(spec, start, size)
        yield from zip(masks.tolist(), zip(*nbr.tolist()))


# -- canonical form --------------------------------------------------------------------

def _rows_search(n: int, nb: tuple[int, ...], bound: Optional[int], stop_below: bool):
    """Branch and bound over vertex orderings for the minimal code.

    The code lists, for k = 1..n-1, the adjacency of position k to positions
    0..k-1, first bit most significant.  With ``stop_below`` the search returns
    as soon as some ordering beats ``bound``.
    """
    total = n * (n - 1) // 2
    best = [bound if bound is not None else 1 << total]
    found = [False]
    order: list[int] = []

    def rec(k: int, used: int, prefix: int, nbits: int) -> bool:
        if k == n:
            if prefix < best[0]:
                best[0] = prefix
                if stop_below:
                    found[0] = True
                    return True
            return False
        cands = []
        for v in range(n):
            if used >> v & 1:
                continue
            row = 0
            for u in order:
                row = (row << 1) | (nb[v] >> u & 1)
            cands.append((row, v))
        cands.sort()
        for row, v in cands:
            new_prefix = (prefix << k) | row
            new_bits = nbits + k
            ceiling = best[0] >> (total - new_bits)
            if new_prefix > ceiling:
                break
            if stop_below and new_prefix < ceiling:
                found[0] = True
                return True
            order.append(v)
            done = rec(k + 1, used | (1 << v), new_prefix, new_bits)
            order.pop()
            if done:
                return True
        return False

    rec(0, 0, 0, 0)
    return best[0], found[0]


def _identity_code(n: int, nb: tuple[int, ...]) -> int:
    code = 0
    for k in range(1, n):
        for i in range(k):
            code = (code << 1) | (nb[k] >> i & 1)
    return code


def _nbr_masks(g: Graph) -> tuple[int, ...]:
    return tuple(sum(1 << u for u in nb) for nb in g.adjacency)


def canonical_form(g: Graph) -> tuple[int, int]:
    """``(n, code)`` where code is minimal over all vertex orderings; equal iff isomorphic."""
    if g.n > MAX_N:
        raise ValueError(f"canonical form is limited to n <= {MAX_N}")
    code, _ = _rows_search(g.n, _nbr_masks(g), None, stop_below=False)
    return g.n, code


def is_canonical(g: Graph) -> bool:
    """True iff g's own labelling already achieves the minimal code."""
    nb = _nbr_masks(g)
    _, beaten = _rows_search(g.n, nb, _identity_code(g.n, nb), stop_below=True)
    return not beaten


def canonical_graph(g: Graph) -> Graph:
    """The relabelling of g that realises its canonical code."""
    n, code = canonical_form(g)
    edges_bits = n * (n - 1) // 2
    adjacency: list[list[int]] = [[] for _ in range(n)]
    t = edges_bits
    for k in range(1, n):
        for i in range(k):
            t -= 1
            if code >> t & 1:
                adjacency[i].append(k)
                adjacency[k].append(i)
    return Graph(n, tuple(tuple(sorted(a)) for a in adjacency))


# -- public enumeration ------------------------------------------------------------------

def enumerate_graphs(spec: EnumerationSpec) -> Iterator[Graph]:
    """Every labelled graph meeting ``spec``, ascending by mask.

    With canonical dedup only the labelling equal to its canonical form is
    yielded, one per isomorphism class.
    """
    table = _bits_of(spec.n)
    for _, nb in _iter_masks(spec):
        g = Graph(spec.n, tuple(table[b] for b in nb))
        if spec.dedup is Dedup.CANONICAL and not is_canonical(g):
            continue
        yield g


def worker_count() -> int:
    cap = os.environ.get("ZAGREB_THREADS")
    cores = os.cpu_count() or 1
    if cap:
        try:
            return max(1, min(int(cap), cores))
        except ValueError:
            pass
    return cores


@dataclass(frozen=True)
class SurveyRow:
    graph: Graph
    verdict: Verdict
    regularity: RegularityClass
    structure: Optional[StructureCase]
    agreement: Optional[bool]


def _survey_one(g: Graph, interval: Optional[IntervalSpec]) -> SurveyRow:
    verdict = compare(g).verdict
    reg = classify_regularity(g)
    if interval is None:
        return SurveyRow(g, verdict, reg, None, None)
    st: EqualityStructure = classify_equality_structure(g, interval)
    agree = (verdict is Verdict.EQUAL) == (st.verdict is not StructureCase.NOT_EQUALITY)
    return SurveyRow(g, verdict, reg, st.verdict, agree)


def _survey_chunk(args) -> list[SurveyRow]:
    spec, interval, start, size = args
    table = _bits_of(spec.n)
    masks, nbr = _chunk_survivors(spec, start, size)
    rows = []
    for nb in zip(*nbr.tolist()):
        g = Graph(spec.n, tuple(table[b] for b in nb))
        if spec.dedup is Dedup.CANONICAL and not is_canonical(g):
            continue
        rows.append(_survey_one(g, interval))
    return rows


def _check_survey(spec: EnumerationSpec, interval: Optional[IntervalSpec]) -> None:
    if spec.min_degree < 1:
        raise ValueError("surveys need min_degree >= 1 (isolated vertices cannot be compared)")
    if interval is not None and not (interval.a <= spec.min_degree and spec.max_degree <= interval.hi):
        raise ValueError(
            f"degree bounds [{spec.min_degree}, {spec.max_degree}] are not inside {interval}"
        )


def iter_survey(spec: EnumerationSpec, interval: Optional[IntervalSpec] = None,
                workers: Optional[int] = None) -> Iterator[SurveyRow]:
    """Survey rows in enumeration order; chunks may run in worker processes."""
    _check_survey(spec, interval)
    jobs = [(spec, interval, start, size) for start, size in _chunks(spec)]
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(jobs) <= 1:
        for job in jobs:
            yield from _survey_chunk(job)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for rows in pool.map(_survey_chunk, jobs):
            yield from rows


def survey_equality(spec: EnumerationSpec, interval: Optional[IntervalSpec] = None) -> list[SurveyRow]:
    return list(iter_survey(spec, interval))


def counterexample_search(n_max: int, dedup: bool = True) -> list[Graph]:
    """Connected graphs on at most n_max vertices with M1/n > M2/m.

    With ``dedup`` one canonical representative per isomorphism class is
    returned, ordered by (n, canonical code).
    """
    if n_max > MAX_N:
        raise ValueError(f"n_max must be <= {MAX_N}")
    found: dict[tuple[int, int], Graph] = {}
    plain: list[Graph] = []
    for n in range(2, n_max + 1):
        spec = EnumerationSpec(n, min_degree=1, connected_only=True)
        for g in enumerate_graphs(spec):
            if compare(g).verdict is Verdict.STRICTLY_GREATER:
                if dedup:
                    key = canonical_form(g)
                    if key not in found:
                        found[key] = canonical_graph(g)
                else:
                    plain.append(g)
    if dedup:
        return [found[k] for k in sorted(found)]
    return plain
