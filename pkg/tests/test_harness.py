import json

import numpy as np
import pytest

from conftest import catalog, ring
from zagraph import harness
from zagraph.harness import (ALL_CHECKS, CHECK_ORDER, THEOREMS, CatalogEntry, TheoremReport,
                             build_catalog, check_entry, matrix_witnesses, reverify, run_suite)


def verdicts(text):
    return {r.check: r for r in check_entry(CatalogEntry(text, "test"))}


class TestCatalog:
    def test_contains_named_rings(self):
        names = {e.provenance for e in catalog(64)}
        assert {"Z2 x Z2", "Z5 x Z5", "Z2 x GF(4)", "M2(Z2)"} <= names
        assert "M2(Z3)" not in names

    def test_zn_only(self):
        assert [e.provenance for e in build_catalog(8, ["zn"])] == [f"Z{n}" for n in range(2, 9)]

    def test_order_one(self):
        assert build_catalog(1) == []

    def test_orders_respected_and_unique(self):
        entries = catalog(64)
        assert len({e.provenance for e in entries}) == len(entries)
        assert all(e.ring.order <= 64 for e in entries)

    def test_matrix_family_grows(self):
        assert [e.provenance for e in build_catalog(81, ["matrix"])] == ["M2(Z2)", "M2(Z3)"]

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            build_catalog(8, ["zn", "quaternions"])


class TestRegistry:
    def test_every_runtime_theorem_has_a_check(self):
        runtime = [t.id for t in THEOREMS if t.kind == "runtime"]
        assert runtime == list(CHECK_ORDER) and set(ALL_CHECKS) == set(runtime)
        documented = {t.id for t in THEOREMS if t.kind != "runtime"}
        assert documented == {"finite-degree", "localization"}

    def test_records_in_table_order(self):
        assert [r.check for r in check_entry(CatalogEntry("Z6", "t"))] == list(CHECK_ORDER)


class TestExamples:
    def test_star_z2_gf4(self):
        v = verdicts("Z2 x GF(4)")
        assert v["star-classification"].verdict == "pass"
        assert v["star-max-ideals"].verdict == "pass"

    def test_regular_z5xz5(self):
        v = verdicts("Z5 x Z5")
        for check in ("regular-classification", "regular-prime-power", "coann-converse-witness",
                      "complete-implies-coann-complete", "bipartite-classification"):
            assert v[check].verdict == "pass", check

    def test_z4(self):
        v = verdicts("Z4")
        assert v["star-classification"].verdict == "pass"
        assert v["empty-graph"].verdict == "pass"
        assert v["complete-classification"].verdict == "pass"

    def test_diameter_z2xz3(self):
        v = verdicts("Z2 x Z3")
        assert v["field-product-diameter"].verdict == "pass"
        assert "diameter 2, expected 2" in v["field-product-diameter"].detail

    def test_matrix_girth(self):
        v = verdicts("M2(Z2)")
        assert v["matrix-girth"].verdict == "pass"
        # commutative-only statements do not claim evidence from a matrix ring
        assert v["star-classification"].verdict == "inapplicable"

    def test_matrix_witnesses_are_the_documented_ones(self):
        m = ring("M2(Z2)")
        labels = [m.element_labels[x] for x in matrix_witnesses(m)]
        assert labels == ["[[1,0],[0,0]]", "[[0,0],[1,0]]", "[[0,1],[0,1]]"]

    def test_z12_conn2_vacuous(self):
        v = verdicts("Z12")
        assert v["connected-bezout"].verdict == "pass"
        assert "antecedent" in v["connected-bezout"].detail or "Jac" in v["connected-bezout"].detail

    def test_cap_lemma_z6(self):
        assert verdicts("Z6")["prime-pair-adjacency"].verdict == "pass"

    def test_clique_bound(self):
        assert verdicts("Z2 x Z2 x Z2")["clique-lower-bound"].verdict == "pass"

    def test_inapplicable_is_not_pass(self):
        v = verdicts("Z4[x]/(x^2)")
        assert v["regular-classification"].verdict == "inapplicable"
        assert v["bipartite-classification"].verdict == "inapplicable"


class TestSuite:
    def test_empty_catalog(self):
        report = run_suite([])
        assert report.records == [] and not report.failed
        assert report.to_text().endswith("RESULT: PASS\n")

    def test_small_sweep(self):
        report = run_suite(catalog(32))
        assert not report.failed
        assert report.counts()["skipped"] == 0

    def test_deterministic(self):
        entries = build_catalog(24)
        a = run_suite(entries)
        b = run_suite(build_catalog(24))
        assert a.to_text() == b.to_text() and a.to_jsonl() == b.to_jsonl()

    def test_jsonl_schema(self):
        report = run_suite(build_catalog(6))
        for line in report.to_jsonl().splitlines():
            rec = json.loads(line)
            assert list(rec) == ["check", "ring", "verdict", "detail", "counterexample"]
        rec = json.loads(report.to_jsonl(timings=True).splitlines()[0])
        assert "elapsed_ms" in rec

    def test_budget_becomes_skipped(self):
        records = check_entry(CatalogEntry("M2(Z3)", "matrix"), budget_ms=0)
        assert {r.verdict for r in records} == {"skipped"}
        assert "BudgetExceeded" in records[0].detail


def drop_all_edges(graph):
    return graph.with_adjacency(np.zeros_like(graph.adjacency))


def complete_graph(graph):
    adj = np.ones_like(graph.adjacency)
    np.fill_diagonal(adj, False)
    return graph.with_adjacency(adj)


class TestFaultInjection:
    @pytest.mark.parametrize("corrupt", [drop_all_edges, complete_graph])
    def test_corrupted_adjacency_is_caught(self, corrupt):
        entries = [e for e in catalog(64) if e.provenance in ("Z5 x Z5", "Z2 x Z3 x Z5", "Z12")]
        report = run_suite(entries, graph_filter=corrupt)
        assert report.failed and report.to_text().endswith("RESULT: FAIL\n")
        with_pairs = [r for r in report.failures() if (r.counterexample or {}).get("pairs")]
        assert with_pairs
        # the failures are artifacts of the corrupted graph, so the definition disagrees
        # with the claimed adjacencies (with every one of them once real edges are dropped)
        stale = [not reverify(r) for r in with_pairs]
        assert all(stale) if corrupt is drop_all_edges else any(stale)

    def test_genuine_pairs_reverify(self):
        # pairs claimed from the real graph always agree with the definition
        record = harness.CheckRecord("x", "Z6", "fail", "", {"pairs": [["2", "3", True],
                                                                  ["2", "4", False]]})
        assert reverify(record)
        record.counterexample["pairs"][1][2] = True
        assert not reverify(record)

    def test_full_sweep_failures_reverify(self):
        report = run_suite(catalog(64))
        assert report.failures() == []
        assert all(reverify(r) for r in report.records if r.verdict == "fail")


def test_report_helpers():
    report = TheoremReport(check_entry(CatalogEntry("Z6", "t")), 1)
    assert len(report.by_check("chi-ge-omega")) == 1
    assert sum(report.counts().values()) == len(CHECK_ORDER)
