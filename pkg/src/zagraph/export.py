"""Stable DOT and JSON renderings of a graph with its invariants."""
import json

from .invariants import INF


def _num(v):
    return "inf" if v == INF else v


def invariants_dict(report) -> dict:
    return {
        "vertex_count": report.vertex_count,
        "edge_count": report.edge_count,
        "connected": report.is_connected,
        "diameter": _num(report.diameter),
        "girth": _num(report.girth),
        "min_degree": report.min_degree,
        "regular_k": report.regular_k,
        "empty": report.is_empty_graph,
        "complete": report.is_complete,
        "star": report.is_star,
        "bipartite": report.is_bipartite,
        "complete_bipartite": report.is_complete_bipartite,
        "bipartition": list(report.bipartition) if report.bipartition else None,
        "clique_number": report.clique_number,
        "chromatic_number": report.chromatic_number,
    }


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(graph) -> str:
    lines = [f"graph {_quote(f'{graph.kind}({graph.ring_label})')} {{"]
    lines += [f"  {_quote(v)};" for v in graph.vertex_labels]
    labels = graph.vertex_labels
    lines += [f"  {_quote(labels[i])} -- {_quote(labels[j])};" for i, j in graph.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(graph, report, checks=None) -> str:
    doc = {
        "ring": graph.ring_label,
        "graph_kind": graph.kind,
        "vertices": list(graph.vertex_labels),
        "edges": [[i, j] for i, j in graph.edges()],
        "invariants": invariants_dict(report),
    }
    if checks is not None:
        doc["checks"] = checks
    return json.dumps(doc, indent=2) + "\n"


def export_graph(graph, report, fmt: str) -> bytes:
    """Serialize ``graph`` as ``dot`` or ``json``; edges sorted by (i, j)."""
    if fmt == "dot":
        return to_dot(graph).encode("utf-8")
    if fmt == "json":
        return to_json(graph, report).encode("utf-8")
    raise ValueError(f"unknown export format {fmt!r} (expected dot or json)")
