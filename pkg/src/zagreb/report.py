"""Line-oriented reports: ``key: value`` lines, sections separated by blank lines.

Numbers are integers or ``num/den`` fractions in lowest terms; floats never
appear.  Key order is fixed so reports diff cleanly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional

from .graph import Graph, classify_regularity, degree_set, edge_class_counts
from .intervals import IntervalSpec, classify_equality_structure
from .invariants import compare, decomposition_sum

Section = list[tuple[str, str]]


def frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_frac(text: str) -> Fraction:
    num, _, den = text.partition("/")
    return Fraction(int(num), int(den or 1))


def graph_section(g: Graph, interval: Optional[IntervalSpec] = None) -> Section:
    """Every reported quantity for one graph, in report order."""
    rep = compare(g)
    out: Section = [
        ("n", str(rep.n)),
        ("m", str(rep.m)),
        ("M1", str(rep.m1)),
        ("M2", str(rep.m2)),
        ("M1/n", frac(rep.ratio1)),
        ("M2/m", frac(rep.ratio2)),
        ("verdict", rep.verdict.value),
        ("degree_set", ",".join(map(str, degree_set(g)))),
        ("regularity", str(classify_regularity(g))),
    ]
    out.extend((f"m[{i},{j}]", str(c)) for (i, j), c in edge_class_counts(g).items())
    out.append(("decomposition_sum", str(decomposition_sum(g))))
    if interval is not None:
        st = classify_equality_structure(g, interval)
        out.append(("interval", str(interval)))
        out.append(("structure", st.verdict.value))
        out.append(("components", " ".join(map(str, st.evidence))))
    return out


def format_sections(sections: Iterable[Section]) -> str:
    return "\n".join("".join(f"{k}: {v}\n" for k, v in sec) for sec in sections)


def parse_sections(text: str) -> list[dict[str, str]]:
    out: list[dict[str, str]] = []
    cur: dict[str, str] = {}
    for line in text.splitlines():
        if not line.strip():
            if cur:
                out.append(cur)
                cur = {}
            continue
        key, sep, value = line.partition(": ")
        if not sep:
            raise ValueError(f"malformed report line {line!r}")
        cur[key] = value
    if cur:
        out.append(cur)
    return out
