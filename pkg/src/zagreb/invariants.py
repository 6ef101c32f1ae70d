"""First and second Zagreb indices and their exact comparison.

Every comparison is an integer cross-multiplication; ``Fraction`` only shows up
where a fractional value is the answer (``f`` and the reported ratios).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .graph import Graph, GraphError, edge_class_counts


class DegenerateGraphError(GraphError):
    """Graph is edgeless or has isolated vertices, so M1/n vs M2/m is not compared."""


class Verdict(Enum):
    STRICTLY_LESS = "StrictlyLess"  # M1/n < M2/m
    EQUAL = "Equal"
    STRICTLY_GREATER = "StrictlyGreater"  # M1/n > M2/m, inequality violated


@dataclass(frozen=True)
class ZagrebReport:
    n: int
    m: int
    m1: int
    m2: int
    verdict: Verdict

    @property
    def ratio1(self) -> Fraction:
        """M1/n."""
        return Fraction(self.m1, self.n)

    @property
    def ratio2(self) -> Fraction:
        """M2/m."""
        return Fraction(self.m2, self.m)


def m1(g: Graph) -> int:
    return sum(len(nb) ** 2 for nb in g.adjacency)


def m2(g: Graph) -> int:
    deg = g.degrees()
    at = deg.__getitem__
    return sum(d * sum(map(at, nb)) for d, nb in zip(deg, g.adjacency)) // 2


def _check_comparable(g: Graph) -> None:
    if g.n == 0 or g.m == 0:
        raise DegenerateGraphError("graph has no edges")
    isolated = [v for v, nb in enumerate(g.adjacency) if not nb]
    if isolated:
        raise DegenerateGraphError(f"isolated vertices present: {isolated[:10]}")


def compare(g: Graph) -> ZagrebReport:
    _check_comparable(g)
    n, m = g.n, g.m
    a, b = m1(g), m2(g)
    diff = n * b - m * a
    if diff > 0:
        verdict = Verdict.STRICTLY_LESS
    elif diff < 0:
        verdict = Verdict.STRICTLY_GREATER
    else:
        verdict = Verdict.EQUAL
    return ZagrebReport(n, m, a, b, verdict)


def f(i: int, j: int, k: int, l: int) -> Fraction:
    """Interaction term of edge classes (i, j) and (k, l).

    ``(ij - kl) * (ij(k + l) - kl(i + j)) / (ijkl)``.
    """
    if min(i, j, k, l) < 1:
        raise ValueError(f"f needs positive degrees, got {(i, j, k, l)}")
    ij, kl = i * j, k * l
    return Fraction((ij - kl) * (ij * (k + l) - kl * (i + j)), ij * kl)


def f_sign(i: int, j: int, k: int, l: int) -> int:
    """Sign of ``f`` without building a fraction."""
    ij, kl = i * j, k * l
    s1 = (ij > kl) - (ij < kl)
    t = ij * (k + l) - kl * (i + j)
    return s1 * ((t > 0) - (t < 0))


def decomposition_sum(g: Graph) -> int:
    """Sum of ``f(A, B) * m_A * m_B`` over unordered pairs of distinct edge classes.

    Equals ``n*M2 - m*M1``; diagonal pairs are skipped because f vanishes there.
    """
    _check_comparable(g)
    return _class_pair_sum(tuple(edge_class_counts(g).items()))


@lru_cache(maxsize=1 << 16)
def _class_pair_sum(classes: tuple[tuple[tuple[int, int], int], ...]) -> int:
    # depends only on the edge-class table, which repeats a lot across a survey
    total = Fraction(0)
    for (ca, ma), (cb, mb) in combinations(sorted(classes), 2):
        total += f(*ca, *cb) * ma * mb
    if total.denominator != 1:
        raise ArithmeticError(f"decomposition sum is not integral: {total}")
    return total.numerator
