"""Command-line interface.

Exit codes: 0 when results have the predicted shape, 2 for a surprise
(a result that contradicts the prediction), 1 for usage or I/O errors.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from pathlib import Path
from typing import Optional, Sequence

from . import enumeration as en
from .families import (
    ConstructionError,
    FamilyParams,
    build_gxyzw,
    catalog_entry,
    catalog_generate,
    gap_polynomial,
    solve_params,
)
from .formats import GraphFormatError, detect_format, format_graphs, read_graphs, to_graph6
from .graph import GraphError, Regularity, classify_regularity
from .intervals import (
    IntervalSpec,
    find_harmonic_collisions,
    find_product_collisions,
    is_good_interval,
    predicted_harmonic_collisions,
    predicted_product_collisions,
    scan_f_sign,
)
from .invariants import Verdict, compare, f
from .report import format_sections, frac, graph_section

EXIT_OK, EXIT_ERROR, EXIT_SURPRISE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _pair(text: str) -> tuple[int, int]:
    try:
        a, p = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'a,p', got {text!r}") from None
    return a, p


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _interval(pair: Optional[tuple[int, int]]) -> Optional[IntervalSpec]:
    return None if pair is None else IntervalSpec(*pair)


def _emit(sections) -> None:
    sys.stdout.write(format_sections(sections))
    sys.stdout.flush()


def _write_graph(g, out: Optional[str], fmt: Optional[str]) -> None:
    if out:
        Path(out).write_text(format_graphs([g], fmt or detect_format(out)))


# -- commands ----------------------------------------------------------------------

def cmd_compute(args) -> int:
    graphs = read_graphs(args.file, args.format)
    interval = _interval(args.interval)
    _emit([[("graph", str(k))] + graph_section(g, interval) for k, g in enumerate(graphs, 1)])
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.solve:
        if args.y is None or args.z is None:
            raise GraphError("--solve needs --y and --z")
        params = solve_params(args.y, args.z)
        _emit([[("solved", f"x={params.x} w={params.w}"), ("x", str(params.x)), ("w", str(params.w))]])
        print()
    else:
        missing = [k for k in "xyzw" if getattr(args, k) is None]
        if missing:
            raise GraphError(f"missing --{', --'.join(missing)} (or use --solve)")
        params = FamilyParams(args.x, args.y, args.z, args.w)
    g = build_gxyzw(params)
    _write_graph(g, args.out, args.format)
    head = [
        ("family", "G(x,y,z,w)"),
        ("params", f"{params.x},{params.y},{params.z},{params.w}"),
        ("gap_polynomial", str(gap_polynomial(params))),
    ]
    if params.degree_collision:
        head.append(("note", f"z={params.z} coincides with a fixed degree; fewer than 4 distinct degrees"))
    _emit([head + graph_section(g)])
    rep = compare(g)
    consistent = rep.m * rep.m1 - rep.n * rep.m2 == gap_polynomial(params)
    if not consistent or (args.solve and rep.verdict is not Verdict.EQUAL):
        return EXIT_SURPRISE
    return EXIT_OK


def _tuple_lines(tuples) -> list[tuple[str, str]]:
    return [(f"tuple[{k}]", ",".join(map(str, t))) for k, t in enumerate(tuples, 1)]


def cmd_scan(args) -> int:
    if args.kind == "fsign":
        if args.set:
            degrees = args.set
        elif args.a is not None and args.p is not None:
            degrees = list(range(args.a, args.a + args.p + 1))
        else:
            raise GraphError("fsign needs --set or both --a and --p")
        witness = scan_f_sign(degrees)
        sec = [("kind", "fsign"), ("set", ",".join(map(str, sorted(set(degrees)))))]
        if witness is None:
            sec.append(("witness", "none"))
        else:
            sec += [("witness", ",".join(map(str, witness))), ("f", frac(f(*witness)))]
        _emit([sec])
        return EXIT_OK if witness is None else EXIT_SURPRISE

    if args.a is None or args.p is None:
        raise GraphError(f"{args.kind} scan needs --a and --p")
    a, p = args.a, args.p
    if args.kind == "product":
        found, predicted = find_product_collisions(a, p), predicted_product_collisions(a, p)
    else:
        found, predicted = find_harmonic_collisions(a, p), predicted_harmonic_collisions(a, p)
    sec = [
        ("kind", args.kind),
        ("interval", str(IntervalSpec(a, p))),
        ("good", "yes" if is_good_interval(a, p) else "no"),
        ("count", str(len(found))),
    ]
    sec += _tuple_lines(found.tuples)
    if predicted is None:
        sec.append(("prediction", "none"))
        _emit([sec])
        return EXIT_OK
    match = found.tuples == tuple(predicted)
    sec.append(("prediction", ";".join(",".join(map(str, t)) for t in predicted) or "empty"))
    sec.append(("match", "yes" if match else "no"))
    _emit([sec])
    return EXIT_OK if match else EXIT_SURPRISE


def cmd_enumerate(args) -> int:
    interval = _interval(args.survey_interval)
    lo = args.min_deg if args.min_deg is not None else (interval.a if interval else 0)
    hi = args.max_deg
    if hi is None:
        hi = args.n - 1 if interval is None else min(args.n - 1, interval.hi)
    spec = en.EnumerationSpec(
        args.n, lo, hi, args.connected, en.Dedup.CANONICAL if args.dedup else en.Dedup.NONE
    )
    head = [
        ("n", str(spec.n)),
        ("degrees", f"[{spec.min_degree},{spec.max_degree}]"),
        ("connected", "yes" if spec.connected_only else "no"),
        ("dedup", spec.dedup.value),
    ]
    if interval is None:
        graphs = list(en.enumerate_graphs(spec))
        _emit([head + [("count", str(len(graphs)))]])
        if graphs:
            print()
            sys.stdout.write("".join(to_graph6(g) + "\n" for g in graphs))
        return EXIT_OK

    tally: Counter = Counter()
    disagreements = []
    for row in en.iter_survey(spec, interval):
        tally[(row.verdict.value, row.structure.value)] += 1
        if not row.agreement:
            disagreements.append(row.graph)
    sec = head + [("interval", str(interval)), ("count", str(sum(tally.values())))]
    sec += [(f"rows[{v},{s}]", str(c)) for (v, s), c in sorted(tally.items())]
    sec.append(("disagreements", str(len(disagreements))))
    _emit([sec])
    if disagreements:
        print()
        sys.stdout.write("".join(to_graph6(g) + "\n" for g in disagreements))
        return EXIT_SURPRISE
    return EXIT_OK


def cmd_catalog(args) -> int:
    entry = catalog_entry(args.family, *args.params)
    g = catalog_generate(entry)
    _write_graph(g, args.out, args.format)
    verdict = compare(g).verdict
    head = [
        ("family", entry.name),
        ("params", ",".join(map(str, entry.params))),
        ("expected_verdict", entry.expected_verdict.value),
    ]
    _emit([head + graph_section(g)])
    return EXIT_OK if verdict is entry.expected_verdict else EXIT_SURPRISE


def cmd_probe(args) -> int:
    """Sample small graphs with degrees in [a, a+p] for non-trivial equality holders."""
    interval = IntervalSpec(args.a, args.p)
    hits = []
    checked = 0
    for n in range(2, args.n_max + 1):
        lo, hi = interval.a, min(interval.hi, n - 1)
        if lo > hi:
            continue
        for g in en.enumerate_graphs(en.EnumerationSpec(n, lo, hi, True, en.Dedup.CANONICAL)):
            checked += 1
            if compare(g).verdict is not Verdict.EQUAL:
                continue
            if classify_regularity(g).kind not in (Regularity.REGULAR, Regularity.BIREGULAR_CLASS1):
                hits.append(g)
    _emit([[("interval", str(interval)), ("good", "yes" if interval.is_good else "no"),
            ("checked", str(checked)), ("nontrivial_equality", str(len(hits)))]])
    if hits:
        print()
        sys.stdout.write("".join(to_graph6(g) + "\n" for g in hits))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zagreb", description="Exact Zagreb index comparisons and scans.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="report M1, M2 and the comparison for graphs in a file")
    p.add_argument("file")
    p.add_argument("--format", choices=["edgelist", "graph6"])
    p.add_argument("--interval", type=_pair, metavar="A,P", help="also classify equality structure")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("construct", help="build G(x,y,z,w), or solve for x and w")
    for k in "xyzw":
        p.add_argument(f"--{k}", type=int)
    p.add_argument("--solve", action="store_true")
    p.add_argument("--out")
    p.add_argument("--format", choices=["edgelist", "graph6"])
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("scan", help="collision and sign scans over an interval")
    p.add_argument("--a", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--kind", choices=["product", "harmonic", "fsign"], required=True)
    p.add_argument("--set", type=_int_list, help="explicit degree set for fsign")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("enumerate", help="enumerate small graphs, optionally surveying equality")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--min-deg", type=int)
    p.add_argument("--max-deg", type=int)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--dedup", action="store_true")
    p.add_argument("--survey-interval", type=_pair, metavar="A,P")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("catalog", help="generate a known equality or violation family")
    p.add_argument("--family", required=True)
    p.add_argument("--params", type=_int_list, required=True)
    p.add_argument("--out")
    p.add_argument("--format", choices=["edgelist", "graph6"])
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("probe", help="look for non-trivial equality graphs with degrees in [a, a+p]")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n-max", type=int, default=6)
    p.set_defaults(func=cmd_probe)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, GraphFormatError, ConstructionError, ValueError, KeyError, OSError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"zagreb: error: {msg}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
