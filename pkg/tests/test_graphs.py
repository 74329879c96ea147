import numpy as np
import pytest

import oracles
from conftest import catalog, ring
from zagraph.graphs import (COANN, ZA, ZERODIV, coann_ideal_graph, za_adjacent, za_graph,
                            zero_divisor_graph)
from zagraph.ideals import spectrum
from zagraph.ring import classify_elements, matrix_index


def edge_labels(g):
    return {frozenset((g.vertex_labels[i], g.vertex_labels[j])) for i, j in g.edges()}


def E(*pairs):
    return {frozenset(p) for p in pairs}


class TestZA:
    def test_z6(self):
        g = za_graph(ring("Z6"))
        assert g.kind == ZA and g.vertex_labels == ("2", "3", "4")
        assert edge_labels(g) == E(("2", "3"), ("3", "4"))

    def test_z5xz5_is_k44(self):
        g = za_graph(ring("Z5 x Z5"))
        assert g.vertex_count == 8 and g.edge_count == 16
        left = {f"({u},0)" for u in range(1, 5)}
        right = {f"(0,{v})" for v in range(1, 5)}
        assert edge_labels(g) == {frozenset((a, b)) for a in left for b in right}

    def test_z4(self):
        g = za_graph(ring("Z4"))
        assert g.vertex_labels == ("2",) and g.edge_count == 0

    def test_field_is_vertexless(self):
        g = za_graph(ring("GF(8)"))
        assert g.vertex_count == 0 and g.edges() == []

    @pytest.mark.parametrize("text", ["Z4", "Z8", "Z9", "Z27", "Z25", "Z32", "Z49"])
    def test_chained_rings_edgeless(self, text):
        assert za_graph(ring(text)).edge_count == 0

    def test_oracle_equivalence(self):
        for entry in catalog(64):
            r = entry.ring
            side = "two_sided" if r.commutative else "left"
            g = za_graph(r)
            vertices, edges = oracles.za_edges(r, side)
            assert list(g.vertex_ids) == vertices, entry.provenance
            got = {(g.vertex_ids[i], g.vertex_ids[j]) for i, j in g.edges()}
            assert got == edges, entry.provenance

    @pytest.mark.parametrize("side", ["left", "right", "two_sided"])
    def test_matrix_sides_match_oracle(self, side):
        r = ring("M2(Z2)")
        g = za_graph(r, side)
        _, edges = oracles.za_edges(r, side)
        assert {(g.vertex_ids[i], g.vertex_ids[j]) for i, j in g.edges()} == edges
        for i, j in g.edges()[:5]:
            assert za_adjacent(r, g.vertex_ids[i], g.vertex_ids[j], side)

    def test_matrix_witnesses_left(self):
        m = ring("M2(Z2)")
        a = matrix_index(m, [[1, 0], [0, 0]])
        b = matrix_index(m, [[0, 0], [1, 0]])
        c = matrix_index(m, [[0, 1], [0, 1]])
        for x, y in [(a, b), (a, c), (b, c)]:
            assert za_adjacent(m, x, y, "left")

    def test_idempotent_complements_adjacent(self):
        for entry in catalog(64):
            r = entry.ring
            if not r.commutative:
                continue
            g = za_graph(r)
            for e in classify_elements(r).idempotents.indices():
                f = int(r.sub(r.one_index, e))
                if e not in (0, r.one_index):
                    assert g.has_edge(g.vertex_of(e), g.vertex_of(f)), entry.provenance

    def test_cap_lemma(self):
        # primes meeting in zero give complete bipartite cross edges
        for text in ["Z6", "Z2 x Z3 x Z5", "Z5 x Z5", "Z2 x GF(4)"]:
            r = ring(text)
            g = za_graph(r)
            primes = spectrum(r).prime_ideals
            for i, p in enumerate(primes):
                for q in primes[i + 1:]:
                    if (p.members & q.members).is_zero_only():
                        for x in p.indices()[1:]:
                            for y in q.indices()[1:]:
                                assert g.has_edge(g.vertex_of(x), g.vertex_of(y))


class TestCoann:
    def test_z5xz5(self):
        g = coann_ideal_graph(ring("Z5 x Z5"))
        assert g.kind == COANN and g.vertex_count == 2 and g.edge_count == 1

    def test_field(self):
        assert coann_ideal_graph(ring("GF(9)")).vertex_count == 0

    def test_z12(self):
        g = coann_ideal_graph(ring("Z12"))
        assert sorted(g.vertex_labels) == ["(2)", "(3)", "(4)", "(6)"]
        assert edge_labels(g) == E(("(2)", "(3)"), ("(3)", "(4)"))


class TestZeroDivisor:
    def test_z6(self):
        g = zero_divisor_graph(ring("Z6"))
        assert g.kind == ZERODIV
        assert edge_labels(g) == E(("2", "3"), ("3", "4"))

    def test_field(self):
        assert zero_divisor_graph(ring("GF(7)")).vertex_count == 0

    def test_z4_no_loop(self):
        g = zero_divisor_graph(ring("Z4"))
        assert g.vertex_labels == ("2",) and g.edge_count == 0


def test_all_builders_symmetric_hollow():
    for entry in catalog(64):
        r = entry.ring
        builders = [za_graph, zero_divisor_graph] + ([coann_ideal_graph] if r.commutative else [])
        for build in builders:
            adj = build(r).adjacency
            assert np.array_equal(adj, adj.T) and not adj.diagonal().any(), entry.provenance


def test_graph_is_immutable():
    g = za_graph(ring("Z6"))
    with pytest.raises(ValueError):
        g.adjacency[0, 1] = False
