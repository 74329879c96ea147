"""Command line front end: ``zagraph analyze | verify | sweep``."""
import argparse
import json
import sys

from . import harness
from .errors import BudgetExceeded, CapacityError, ExprError, ZAGraphError
from .export import export_graph, to_json
from .expr import elaborate, parse_ring_expr, render
from .graphs import GRAPH_BUILDERS, za_graph
from .invariants import DEFAULT_BUDGET_MS, INF, invariant_report
from .ring import DEFAULT_MAX_TABLE_ORDER, default_side

PROG = "zagraph"
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RUNTIME = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common():
    common = _Parser(add_help=False)
    common.add_argument("--budget-ms", type=int, default=argparse.SUPPRESS,
                        help=f"time budget for exact clique/chromatic search (default {DEFAULT_BUDGET_MS})")
    common.add_argument("--max-table-order", type=int, default=argparse.SUPPRESS,
                        help=f"largest ring stored as full tables (default {DEFAULT_MAX_TABLE_ORDER})")
    return common


def build_parser():
    common = _common()
    parser = _Parser(prog=PROG, parents=[common],
                     description="Zero-annihilator graphs of finite rings.")
    parser.set_defaults(budget_ms=DEFAULT_BUDGET_MS, max_table_order=DEFAULT_MAX_TABLE_ORDER)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("analyze", parents=[common], help="build a graph and report its invariants")
    p.add_argument("expr")
    p.add_argument("--graph", choices=sorted(GRAPH_BUILDERS), default="za")
    p.add_argument("--side", choices=["left", "right", "twosided"], default=None)
    p.add_argument("--export", choices=["dot", "json"], default=None)
    p.add_argument("--out", default=None)

    p = sub.add_parser("verify", parents=[common], help="run every applicable theorem check on one ring")
    p.add_argument("expr")
    p.add_argument("--export", choices=["text", "json"], default="text")

    p = sub.add_parser("sweep", parents=[common], help="run all checks over the generated catalog")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--families", default=",".join(harness.FAMILIES))
    p.add_argument("--report", default=None,
                   help="write the full report here (JSON lines if the name ends in .jsonl)")
    p.add_argument("--timings", action="store_true", help="include per-check timings in the report")
    return parser


def _fmt(v):
    return "inf" if v == INF else str(v)


def analysis_text(ring, graph, report, side=None) -> str:
    labels = graph.vertex_labels
    lines = [
        f"ring: {ring.label} (order {ring.order}, {'commutative' if ring.commutative else 'noncommutative'})",
        f"graph: {graph.kind}" + (f" (annihilator side {side})" if side else ""),
        f"vertices ({graph.vertex_count}): " + ", ".join(labels),
        f"edges ({graph.edge_count}): " + ", ".join(f"{labels[i]}-{labels[j]}" for i, j in graph.edges()),
        f"connected: {'yes' if report.is_connected else 'no'}  components: {report.component_count}"
        f"  diameter: {_fmt(report.diameter)}",
        f"girth: {_fmt(report.girth)}",
        "degrees: " + " ".join(str(d) for d in report.degree_sequence)
        + f"  min: {report.min_degree}  regular: {report.regular_k if report.regular_k is not None else 'no'}",
    ]
    shapes = [name for name, flag in (("empty", report.is_empty_graph), ("complete", report.is_complete),
                                      ("star", report.is_star), ("bipartite", report.is_bipartite),
                                      ("complete bipartite", report.is_complete_bipartite)) if flag]
    lines.append("shape: " + (", ".join(shapes) if shapes else "none"))
    if report.is_star:
        degrees = report.degree_sequence
        center = max(range(len(degrees)), key=lambda v: (degrees[v], -v))
        lines.append(f"star center: {labels[center]}")
    if report.bipartition:
        lines.append(f"bipartition: {report.bipartition[0]},{report.bipartition[1]}")
    lines.append(f"clique number: {report.clique_number}  chromatic number: {report.chromatic_number}")
    return "\n".join(lines) + "\n"


def _write(data: bytes, out):
    if out:
        with open(out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def cmd_analyze(args):
    ring = elaborate(parse_ring_expr(args.expr), max_table_order=args.max_table_order)
    side = None
    if args.graph == "za":
        side = default_side(ring) if args.side is None else args.side.replace("twosided", "two_sided")
        graph = za_graph(ring, side)
    else:
        graph = GRAPH_BUILDERS[args.graph](ring)
    report = invariant_report(graph, args.budget_ms)
    if args.export:
        data = export_graph(graph, report, args.export)
    else:
        data = analysis_text(ring, graph, report, side).encode("utf-8")
    _write(data, args.out)
    return EXIT_OK


def cmd_verify(args):
    node = parse_ring_expr(args.expr)
    entry = harness.CatalogEntry(render(node), "cli", args.max_table_order)
    records = harness.check_entry(entry, args.budget_ms)
    report = harness.TheoremReport(records, 1)
    if args.export == "json":
        graph = za_graph(entry.ring)
        inv = invariant_report(graph, args.budget_ms)
        sys.stdout.write(to_json(graph, inv, [r.to_dict() for r in records]))
    else:
        sys.stdout.write(report.to_text())
    return EXIT_FAIL if report.failed else EXIT_OK


def cmd_sweep(args):
    families = [f.strip() for f in args.families.split(",") if f.strip()]
    bad = sorted(set(families) - set(harness.FAMILIES))
    if bad:
        raise UsageError(f"unknown families {','.join(bad)} (choose from {','.join(harness.FAMILIES)})")
    if args.max_order < 1:
        raise UsageError("--max-order must be positive")
    catalog = harness.build_catalog(args.max_order, families, max_table_order=args.max_table_order)
    report = harness.run_suite(catalog, args.budget_ms)
    if args.report:
        if args.report.endswith(".jsonl"):
            data = report.to_jsonl(args.timings)
        else:
            data = report.to_text(args.timings)
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(data)
    c = report.counts()
    sys.stdout.write(
        f"rings: {report.ring_count}  checks: {len(report.records)}  pass: {c['pass']}  fail: {c['fail']}"
        f"  inapplicable: {c['inapplicable']}  skipped: {c['skipped']}\n")
    for r in report.failures():
        sys.stdout.write(f"[fail] {r.check} | {r.ring} | {r.detail} | {json.dumps(r.counterexample)}\n")
    sys.stdout.write("RESULT: " + ("FAIL" if report.failed else "PASS") + "\n")
    return EXIT_FAIL if report.failed else EXIT_OK


COMMANDS = {"analyze": cmd_analyze, "verify": cmd_verify, "sweep": cmd_sweep}


def _error(kind, message, code):
    sys.stderr.write(f"{PROG}: error[{kind}]: {' '.join(str(message).split())}\n")
    return code


def run_command(argv) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        return _error("usage", exc, EXIT_USAGE)
    except ExprError as exc:
        return _error(exc.kind, exc, EXIT_USAGE)
    except (CapacityError, BudgetExceeded) as exc:
        return _error("capacity" if isinstance(exc, CapacityError) else "budget", exc, EXIT_RUNTIME)
    except (ZAGraphError, ValueError, OSError) as exc:
        return _error("runtime", exc, EXIT_RUNTIME)


def main(argv=None):
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
