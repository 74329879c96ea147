import json
from pathlib import Path

import pytest

from conftest import catalog, ring
from zagraph.export import export_graph, invariants_dict
from zagraph.graphs import coann_ideal_graph, za_graph
from zagraph.invariants import invariant_report

GOLDEN = Path(__file__).parent / "golden"

INVARIANT_KEYS = ["vertex_count", "edge_count", "connected", "diameter", "girth", "min_degree",
                  "regular_k", "empty", "complete", "star", "bipartite", "complete_bipartite",
                  "bipartition", "clique_number", "chromatic_number"]


def export(text, fmt, builder=za_graph):
    g = builder(ring(text))
    return export_graph(g, invariant_report(g), fmt)


@pytest.mark.parametrize("name,text,fmt", [
    ("z2xz2.json", "Z2 x Z2", "json"),
    ("z5xz5.dot", "Z5 x Z5", "dot"),
    ("gf7.json", "GF(7)", "json"),
    ("z6.dot", "Z6", "dot"),
    ("m2z2.json", "M2(Z2)", "json"),
])
def test_golden_files(name, text, fmt):
    assert export(text, fmt) == (GOLDEN / name).read_bytes()


def test_k2_json():
    doc = json.loads(export("Z2 x Z2", "json"))
    assert doc["edges"] == [[0, 1]] and doc["invariants"]["complete"] is True
    assert doc["graph_kind"] == "ZA" and doc["ring"] == "Z2 x Z2"
    assert list(doc) == ["ring", "graph_kind", "vertices", "edges", "invariants"]
    assert list(doc["invariants"]) == INVARIANT_KEYS


def test_field_json():
    doc = json.loads(export("GF(7)", "json"))
    assert doc["vertices"] == [] and doc["edges"] == []


def test_dot_edges_sorted():
    text = export("Z5 x Z5", "dot").decode()
    lines = [l for l in text.splitlines() if " -- " in l]
    assert len(lines) == 16
    g = za_graph(ring("Z5 x Z5"))
    labels = g.vertex_labels
    assert lines == [f'  "{labels[i]}" -- "{labels[j]}";' for i, j in sorted(g.edges())]
    assert text.startswith('graph "ZA(Z5 x Z5)" {\n') and text.endswith("}\n")


def test_infinite_values():
    inv = json.loads(export("Z12", "json"))["invariants"]
    assert inv["diameter"] == "inf" and inv["connected"] is False
    assert json.loads(export("Z6", "json"))["invariants"]["girth"] == "inf"


def test_coann_kind():
    doc = json.loads(export("Z12", "json", coann_ideal_graph))
    assert doc["graph_kind"] == "COANN" and len(doc["vertices"]) == 4


def test_unknown_format():
    g = za_graph(ring("Z6"))
    with pytest.raises(ValueError):
        export_graph(g, invariant_report(g), "svg")


def test_catalog_golden_stream():
    lines = (GOLDEN / "catalog64.jsonl").read_text().splitlines()
    entries = catalog(64)
    assert len(lines) == len(entries)
    for line, entry in zip(lines, entries):
        g = za_graph(entry.ring)
        current = json.dumps({"ring": entry.provenance, "vertices": list(g.vertex_labels),
                              "edges": g.edges(), "invariants": invariants_dict(invariant_report(g))},
                             separators=(",", ":"))
        assert current == line
