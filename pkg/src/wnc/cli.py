"""Command-line front end: `wnc report|export|verify|batch`.

Exit codes: 0 success, 1 tool error (bad expression, cap exceeded,
unwritable path, unknown theorem id), 2 verify found a theorem
disagreement. With --allow-known-discrepancies the charted
characteristic-2 / degenerate-degree disagreements downgrade to warnings.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .bitsets import bit_list
from .classify import weakly_nil_clean_set
from .coloring import UNKNOWN, DEFAULT_COLOR_BUDGET
from .errors import WncError
from .graph import build_wnc_graph, edges
from .invariants import INFINITE
from .rings import DEFAULT_CAP, build_ring, format_spec
from .ringexpr import parse_ring_expr
from .theorems import (AGREE, DISAGREE, THEOREM_IDS, compute_report,
                       theorem_suite)


def _jsonable(value):
    if value is INFINITE:
        return "inf"
    if value is UNKNOWN:
        return "unknown"
    return value


def _realize(expr: str, cap: int):
    spec = parse_ring_expr(expr)
    ring = build_ring(spec, cap=cap)
    classification = weakly_nil_clean_set(ring)
    graph = build_wnc_graph(ring, classification)
    return ring, classification, graph


def _names_of(ring, mask):
    return [ring.name(i) for i in bit_list(mask)]


def cmd_report(args) -> int:
    started = time.perf_counter()
    ring, cls, graph = _realize(args.expr, args.cap)
    report = compute_report(ring, cls, graph, want_four_cliques=args.four_cliques,
                            chi_budget=args.color_budget)
    doc = {
        "ring": format_spec(ring.spec),
        "carrier_size": ring.size,
        "is_commutative": ring.is_commutative,
        "idem_set": _names_of(ring, cls.idem),
        "nil_set": _names_of(ring, cls.nil),
        "nc_set": _names_of(ring, cls.nc),
        "wnc_set": _names_of(ring, cls.wnc),
        "class_sizes": {
            "idem": cls.idem.bit_count(),
            "nil": cls.nil.bit_count(),
            "nc": cls.nc.bit_count(),
            "wnc": cls.wnc.bit_count(),
        },
        "is_weakly_nil_clean_ring": cls.wnc == (1 << ring.size) - 1,
        "is_nil_clean_ring": cls.nc == (1 << ring.size) - 1,
        "component_sizes": report.component_sizes,
        "diameter": _jsonable(report.diameter),
        "girth": _jsonable(report.girth),
        "is_bipartite": report.is_bipartite,
        "max_degree": report.max_degree,
        "clique_number": report.clique_number,
        "sum_coloring_colors": report.sum_coloring_colors,
        "chromatic_index": _jsonable(report.chromatic_index),
        "vizing_class": _jsonable(report.vizing_class),
        "theorem_verdicts": [
            {
                "theorem": v.theorem,
                "predicted": v.predicted,
                "computed": v.computed,
                "status": v.status,
                "known_discrepancy": v.known_discrepancy,
            }
            for v in report.theorem_verdicts
        ],
        "tool_version": __version__,
        "wall_time_seconds": round(time.perf_counter() - started, 6),
    }
    if report.four_cliques is not None:
        doc["four_cliques"] = [[ring.name(v) for v in clique]
                               for clique in report.four_cliques]
    if args.json:
        sys.stdout.write(json.dumps(doc, sort_keys=True, ensure_ascii=False) + "\n")
        return 0
    print(f"ring: {doc['ring']}  (size {ring.size}, "
          f"{'commutative' if ring.is_commutative else 'noncommutative'})")
    print(f"idempotents ({doc['class_sizes']['idem']}): "
          + ", ".join(doc["idem_set"]))
    print(f"nilpotents ({doc['class_sizes']['nil']}): "
          + ", ".join(doc["nil_set"]))
    print(f"nil clean set ({doc['class_sizes']['nc']}): "
          + ", ".join(doc["nc_set"]))
    print(f"weakly nil clean set ({doc['class_sizes']['wnc']}): "
          + ", ".join(doc["wnc_set"]))
    print(f"weakly nil clean ring: {doc['is_weakly_nil_clean_ring']}"
          f"  nil clean ring: {doc['is_nil_clean_ring']}")
    print(f"component_sizes: {doc['component_sizes']}")
    print(f"diameter: {doc['diameter']}  girth: {doc['girth']}"
          f"  bipartite: {doc['is_bipartite']}")
    print(f"max_degree: {doc['max_degree']}  clique_number: {doc['clique_number']}")
    print(f"sum_coloring_colors: {doc['sum_coloring_colors']}"
          f"  chromatic_index: {doc['chromatic_index']}"
          f"  vizing_class: {doc['vizing_class']}")
    if report.four_cliques is not None:
        print(f"four_cliques ({len(report.four_cliques)}): "
              + "  ".join("{" + ",".join(ring.name(v) for v in c) + "}"
                          for c in report.four_cliques))
    agree = sum(v.status == AGREE for v in report.theorem_verdicts)
    disagree = sum(v.status == DISAGREE for v in report.theorem_verdicts)
    print(f"theorem verdicts: {agree} agree, {disagree} disagree "
          f"(see `wnc verify` for the table)")
    return 0


def _export_dot(ring, graph) -> str:
    lines = ["graph G {"]
    for v in range(graph.vertex_count):
        lines.append(f'  "{ring.name(v)}";')
    for u, v in edges(graph):
        lines.append(f'  "{ring.name(u)}" -- "{ring.name(v)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _export_json(ring, graph) -> str:
    doc = {
        "vertices": [ring.name(v) for v in range(graph.vertex_count)],
        "edges": [[u, v] for u, v in edges(graph)],
    }
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=False) + "\n"


def _export_csv(ring, graph) -> str:
    lines = ["source,target"]
    for u, v in edges(graph):
        lines.append(f"{ring.name(u)},{ring.name(v)}")
    return "\n".join(lines) + "\n"


def cmd_export(args) -> int:
    ring, _, graph = _realize(args.expr, args.cap)
    if args.format == "dot":
        payload = _export_dot(ring, graph)
    elif args.format == "json":
        payload = _export_json(ring, graph)
    else:
        payload = _export_csv(ring, graph)
    if args.out == "-":
        sys.stdout.write(payload)
    else:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(payload)
        except OSError as exc:
            raise WncError(f"cannot write {args.out}: {exc}") from exc
    return 0


def cmd_verify(args) -> int:
    ring, cls, graph = _realize(args.expr, args.cap)
    verdicts = theorem_suite(ring, cls, graph, chi_budget=args.color_budget)
    if args.theorems:
        wanted = [t.strip() for t in args.theorems.split(",") if t.strip()]
        unknown = [t for t in wanted if t not in THEOREM_IDS]
        if unknown:
            raise WncError("unknown theorem id(s): " + ", ".join(unknown))
        verdicts = [v for v in verdicts if v.theorem in wanted]
    print(f"ring: {format_spec(ring.spec)}  (size {ring.size})")
    width_t = max(len("theorem"), *(len(v.theorem) for v in verdicts)) if verdicts else 7
    width_p = max(len("predicted"), *(len(v.predicted) for v in verdicts)) if verdicts else 9
    print(f"{'theorem':<{width_t}}  {'predicted':<{width_p}}  status     computed")
    failures = 0
    for v in verdicts:
        status = v.status
        if v.status == DISAGREE:
            if args.allow_known_discrepancies and v.known_discrepancy:
                status = "WARN"
            else:
                failures += 1
        print(f"{v.theorem:<{width_t}}  {v.predicted:<{width_p}}  {status:<9}  {v.computed}")
    return 2 if failures else 0


def _parse_zn_range(text: str):
    parts = text.split("..")
    if len(parts) != 2:
        raise WncError(f"invalid range {text!r}; expected A..B")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise WncError(f"invalid range {text!r}; expected integers A..B") from exc
    if lo < 2 or hi < lo:
        raise WncError(f"invalid range {text!r}; need 2 <= A <= B")
    return lo, hi


def cmd_batch(args) -> int:
    lo, hi = _parse_zn_range(args.zn)
    if hi > args.cap:
        raise WncError(f"range end {hi} exceeds the size cap {args.cap}")
    rows = ["n,wnc_size,is_wnc_ring,girth,diameter,clique_number,vizing_class"]
    for n in range(lo, hi + 1):
        ring, cls, graph = _realize(f"Z{n}", args.cap)
        report = compute_report(ring, cls, graph, chi_budget=args.color_budget)
        rows.append(",".join([
            str(n),
            str(cls.wnc.bit_count()),
            str(cls.wnc == (1 << n) - 1).lower(),
            str(_jsonable(report.girth)),
            str(_jsonable(report.diameter)),
            str(report.clique_number),
            str(_jsonable(report.vizing_class)),
        ]))
    payload = "\n".join(rows) + "\n"
    if args.out == "-":
        sys.stdout.write(payload)
    else:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(payload)
        except OSError as exc:
            raise WncError(f"cannot write {args.out}: {exc}") from exc
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wnc",
        description="Weakly nil clean graphs of finite rings: reports, exports, "
                    "theorem verification, and Z_n censuses.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                       help="carrier size cap (default %(default)s)")
        p.add_argument("--color-budget", type=int, default=DEFAULT_COLOR_BUDGET,
                       help="backtracking node budget for exact edge coloring")

    p = sub.add_parser("report", help="classes, invariants, and verdict summary")
    p.add_argument("expr", help='ring expression, e.g. "Z10", "GF(25)", "M2(Z2)"')
    p.add_argument("--json", action="store_true", help="canonical JSON output")
    p.add_argument("--four-cliques", action="store_true",
                   help="include the 4-clique census")
    common(p)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("export", help="write the graph as DOT, JSON, or CSV")
    p.add_argument("expr")
    p.add_argument("--format", choices=("dot", "json", "csv"), required=True)
    p.add_argument("--out", required=True, help="output path ('-' for stdout)")
    common(p)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("verify", help="theorem verdict table (exit 2 on disagreement)")
    p.add_argument("expr")
    p.add_argument("--theorems", help="comma-separated theorem ids to check")
    p.add_argument("--allow-known-discrepancies", action="store_true",
                   help="downgrade charted char-2/small-ring disagreements to warnings")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("batch", help="CSV census over a Z_n range")
    p.add_argument("--zn", required=True, metavar="A..B",
                   help="inclusive modulus range, e.g. 2..100")
    p.add_argument("--out", default="-", help="output path (default stdout)")
    common(p)
    p.set_defaults(func=cmd_batch)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except WncError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
