"""Graph file formats: plain edge lists and graph6.

Edge list::

    n m
    u v        (m lines, 0-based endpoints)

Blank lines and ``#`` comments are skipped when reading.  graph6 follows the
public nauty format (one graph per line, optional ``>>graph6<<`` header).
"""

from __future__ import annotations

from math import isqrt
from pathlib import Path
from typing import Iterable

import numpy as np

from .graph import Graph, GraphError, build_graph

G6_HEADER = ">>graph6<<"


class GraphFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


# -- edge list ---------------------------------------------------------------------

def parse_edgelist(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected two integers, got {line!r}", lineno)
        try:
            rows.append((lineno, int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphFormatError(f"expected two integers, got {line!r}", lineno) from None
    if not rows:
        raise GraphFormatError("empty edge list: missing 'n m' header")
    head_line, n, m = rows[0]
    if n < 0 or m < 0:
        raise GraphFormatError("n and m must be non-negative", head_line)
    edges = rows[1:]
    if len(edges) != m:
        where = edges[-1][0] if edges else head_line
        raise GraphFormatError(f"header declares {m} edges but {len(edges)} follow", where)
    seen = set()
    for lineno, u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"endpoint outside [0, {n})", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {key}", lineno)
        seen.add(key)
    return build_graph(n, [(u, v) for _, u, v in edges])


def format_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# -- graph6 ------------------------------------------------------------------------

def _encode_n(n: int) -> str:
    if n < 0:
        raise GraphError("negative vertex count")
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError("graph6 supports n < 2**36")


def _decode_n(data: bytes) -> tuple[int, int]:
    """Returns (n, number of bytes consumed)."""
    if not data:
        raise ValueError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        width, off = 6, 2
    else:
        width, off = 3, 1
    if len(data) < off + width:
        raise ValueError("truncated vertex count")
    n = 0
    for c in data[off:off + width]:
        n = (n << 6) | (c - 63)
    return n, off + width


def to_graph6(g: Graph) -> str:
    n = g.n
    nbits = n * (n - 1) // 2
    padded = -(-nbits // 6) * 6
    bits = np.zeros(padded, dtype=np.uint8)
    if g.m:
        idx = np.fromiter((v * (v - 1) // 2 + u for u, v in g.edges()), dtype=np.int64, count=g.m)
        bits[idx] = 1
    groups = bits.reshape(-1, 6) @ np.array([32, 16, 8, 4, 2, 1], dtype=np.uint8)
    return _encode_n(n) + (groups.astype(np.uint8) + 63).tobytes().decode("ascii")


def from_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(G6_HEADER):
        s = s[len(G6_HEADER):]
    if s.startswith(":") or s.startswith(";"):
        raise ValueError("sparse6 input is not supported")
    if s.startswith("&"):
        raise ValueError("digraph6 input is not supported")
    data = s.encode("ascii")
    if any(c < 63 or c > 126 for c in data):
        raise ValueError("graph6 characters must lie in '?'..'~'")
    n, off = _decode_n(data)
    nbits = n * (n - 1) // 2
    body = np.frombuffer(data[off:], dtype=np.uint8) - 63
    if len(body) != -(-nbits // 6):
        raise ValueError(f"expected {-(-nbits // 6)} data bytes for n={n}, got {len(body)}")
    bits = np.unpackbits(body[:, None], axis=1)[:, 2:].ravel()
    if bits[nbits:].any():
        raise ValueError("non-zero padding bits")
    edges = []
    for t in np.flatnonzero(bits[:nbits]).tolist():
        v = (1 + isqrt(1 + 8 * t)) // 2
        u = t - v * (v - 1) // 2
        edges.append((u, v))
    return build_graph(n, edges)


def parse_graph6_lines(text: str) -> list[Graph]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            out.append(from_graph6(line))
        except ValueError as e:
            raise GraphFormatError(str(e), lineno) from None
    return out


# -- files -------------------------------------------------------------------------

def detect_format(path: str | Path) -> str:
    return "graph6" if Path(path).suffix.lower() in (".g6", ".graph6") else "edgelist"


def read_graphs(path: str | Path, fmt: str | None = None) -> list[Graph]:
    fmt = fmt or detect_format(path)
    text = Path(path).read_text()
    if fmt == "graph6":
        return parse_graph6_lines(text)
    if fmt == "edgelist":
        return [parse_edgelist(text)]
    raise ValueError(f"unknown format {fmt!r}")


def format_graphs(graphs: Iterable[Graph], fmt: str) -> str:
    graphs = list(graphs)
    if fmt == "graph6":
        return "".join(to_graph6(g) + "\n" for g in graphs)
    if fmt == "edgelist":
        if len(graphs) != 1:
            raise ValueError("an edge-list file holds exactly one graph")
        return format_edgelist(graphs[0])
    raise ValueError(f"unknown format {fmt!r}")

