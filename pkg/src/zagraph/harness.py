"""Catalog of finite rings and finite-instance checks of the ZA(R) theorems.

Every runtime check returns one record per catalog entry with verdict
``pass``, ``fail``, ``inapplicable`` (hypotheses not met by the entry) or
``skipped`` (a capacity or time budget was hit while analyzing the entry).
A ``fail`` always carries a counterexample payload; ``pairs`` entries in a
payload are ``[x, y, adjacent]`` claims about ZA that ``reverify`` checks
against the definition.
"""
from dataclasses import dataclass, field
from functools import cached_property
import itertools
import json
import time


from .errors import BudgetExceeded, CapacityError
from .expr import GF, Matrix, PolyQuotient, Product, ZMod, elaborate, parse_ring_expr, render
from .graphs import coann_ideal_graph, za_adjacent, za_graph
from .ideals import crt_decompose, principal_ideals, ring_predicates, spectrum
from .invariants import INF, DEFAULT_BUDGET_MS, invariant_report, max_clique, shape_classify
from .ring import DEFAULT_MAX_TABLE_ORDER, annihilator, classify_elements, is_prime, prime_power

PASS, FAIL, INAPPLICABLE, SKIPPED = "pass", "fail", "inapplicable", "skipped"
FAMILIES = ("zn", "gf", "products", "local", "matrix")


@dataclass(frozen=True)
class Theorem:
    id: str
    source: str
    statement: str
    # "runtime" checks run on every entry; "documented" ones are recorded only
    kind: str = "runtime"


THEOREMS = (
    Theorem("empty-graph", "Theorem (first)",
            "ZA(R) empty => R local and Ann(x) != 0 for every nonunit x; converse for Bezout R"),
    Theorem("idempotent-adjacency", "Remark",
            "a nontrivial idempotent e is adjacent to 1-e"),
    Theorem("chained-empty", "Remark",
            "zero-dimensional chained R => ZA(R) empty"),
    Theorem("finite-degree", "Theorem (finite)",
            "vacuous for finite rings: the graph and all degrees are finite", "documented"),
    Theorem("localization", "Theorem",
            "ZA(R) = ZA(R_S); for finite R, S consists of units and R_S = R", "documented"),
    Theorem("bipartite-classification", "Theorem",
            "Bezout: bipartite with min degree > 0 <=> complete bipartite <=> R = F1 x F2"),
    Theorem("matrix-girth", "Theorem",
            "girth(ZA(M_n(R))) = 3 for n >= 2, witnessed by the three listed matrices"),
    Theorem("connected-semiprimitive", "Theorem (conn1)",
            "Jac(R) = 0 and some maximal ideal principal => connected, diam <= 4"),
    Theorem("connected-bezout", "Theorem (conn2)",
            "Bezout and connected => Jac(R) = 0 or Jac(R) = {0, x} with x the only vertex"),
    Theorem("connected-corollary", "Corollary",
            "Bezout with a principal maximal ideal: connected <=> Jac(R) = 0 or single vertex"),
    Theorem("field-product-diameter", "Theorem",
            "R = F1 x ... x Fn: diam = 1 (n=2, |F|=2), 2 (n=2 otherwise), 3 (n>=3)"),
    Theorem("star-max-ideals", "Lemma (star1)",
            "ZA(R) a star => |Max(R)| <= 2"),
    Theorem("star-classification", "Theorem (star)",
            "Bezout non-field: star <=> (local, m = {0,x}, x^2 = 0) or R = Z2 x F"),
    Theorem("complete-implies-coann-complete", "Proposition (com)",
            "ZA(R) complete => A_R complete"),
    Theorem("coann-converse-witness", "Remark",
            "A_R complete while ZA(R) is not (converse of the proposition fails)"),
    Theorem("complete-classification", "Theorem",
            "ZA(R) complete <=> one nonzero nonunit, integral domain, or R = Z2 x Z2"),
    Theorem("regular-classification", "Theorem",
            "Bezout: ZA(R) k-regular (0 < k) <=> R = F_{k+1} x F_{k+1}"),
    Theorem("regular-prime-power", "Corollary",
            "Bezout and ZA(R) k-regular (0 < k) => k+1 is a prime power"),
    Theorem("reduced-product-of-fields", "Theorem",
            "finite reduced R is a product of finitely many fields"),
    Theorem("prime-pair-adjacency", "Lemma (cap)",
            "primes P1, P2 with P1 & P2 = 0: nonzero x in P1, y in P2 are adjacent"),
    Theorem("clique-lower-bound", "Theorem (clique)",
            "|Min(R)| = n >= 2 or R = R1 x ... x Rn => omega(ZA(R)) >= n"),
    Theorem("chi-ge-omega", "definition",
            "chi(ZA(R)) >= omega(ZA(R))"),
)

CONN2_BRANCH_NOTE = ("branch 'some nonzero nonunit x has Ann(x) = 0' cannot occur: in a finite ring "
                     "every nonunit is a zero divisor")


# ---------------------------------------------------------------------------
# catalog

@dataclass
class CatalogEntry:
    provenance: str
    family: str
    max_table_order: int = DEFAULT_MAX_TABLE_ORDER

    @cached_property
    def ring(self):
        return elaborate(self.provenance, max_table_order=self.max_table_order)

    @property
    def spec(self):
        return parse_ring_expr(self.provenance)


def _field_name(q):
    return f"Z{q}" if is_prime(q) else f"GF({q})"


_LOCAL = ("Z2[x]/(x^2)", "Z4", "Z8", "Z9", "Z25", "Z27", "Z2[x]/(x^3)", "Z3[x]/(x^2)",
          "Z4[x]/(x^2+x+1)", "Z2[x]/(x^4)", "Z5[x]/(x^2)", "Z4[x]/(x^2)", "Z4[x]/(x^2+2)")
_MIXED = ("Z2 x Z4", "Z3 x Z4", "Z2 x Z2[x]/(x^2)", "Z2 x Z8", "Z2 x Z9", "Z4 x Z4", "Z3 x Z9",
          "Z2 x Z2 x Z4", "Z4 x GF(4)", "Z4 x Z8", "Z4 x Z9", "Z5 x Z4", "Z3 x Z2[x]/(x^2)",
          "Z7 x Z9", "Z2 x Z3 x Z4", "Z2 x Z25")


def build_catalog(max_order: int, families=FAMILIES, *, max_table_order=DEFAULT_MAX_TABLE_ORDER):
    """Deterministic list of catalog entries with order <= max_order."""
    families = tuple(families)
    unknown = set(families) - set(FAMILIES)
    if unknown:
        raise ValueError(f"unknown families: {sorted(unknown)}")
    fields = [q for q in range(2, max_order + 1) if prime_power(q)]
    out = {}

    def add(text, family):
        node = parse_ring_expr(text)
        name = render(node)
        if name not in out and _order_of(node) <= max_order:
            out[name] = CatalogEntry(name, family, max_table_order)

    for family in FAMILIES:
        if family not in families:
            continue
        if family == "zn":
            for n in range(2, max_order + 1):
                add(f"Z{n}", family)
        elif family == "gf":
            for q in fields:
                if not is_prime(q):
                    add(f"GF({q})", family)
        elif family == "products":
            for a, b in itertools.combinations_with_replacement(fields, 2):
                if a * b <= max_order:
                    add(f"{_field_name(a)} x {_field_name(b)}", family)
            for a, b, c in itertools.combinations_with_replacement(fields, 3):
                if a * b * c <= max_order:
                    add(f"{_field_name(a)} x {_field_name(b)} x {_field_name(c)}", family)
            for text in _MIXED:
                add(text, family)
        elif family == "local":
            for text in _LOCAL:
                add(text, family)
        elif family == "matrix":
            for p in (2, 3):
                add(f"M2(Z{p})", family)
    return list(out.values())


def _order_of(node):
    if isinstance(node, ZMod):
        return node.n
    if isinstance(node, GF):
        return node.q
    if isinstance(node, PolyQuotient):
        return node.n ** (len(node.coefficients) - 1)
    if isinstance(node, Matrix):
        return _order_of(node.inner) ** (node.k * node.k)
    out = 1
    for item in node.items:
        out *= _order_of(item)
    return out


# ---------------------------------------------------------------------------
# per-entry analysis

class Analysis:
    """Everything the checks need about one ring, computed once."""

    def __init__(self, entry, budget_ms=DEFAULT_BUDGET_MS, graph_filter=None):
        self.entry = entry
        self.ring = ring = entry.ring
        self.classes = classify_elements(ring)
        graph = za_graph(ring)
        if graph_filter is not None:
            graph = graph_filter(graph)
        self.graph = graph
        self.report = invariant_report(graph, budget_ms)
        self.budget_ms = budget_ms
        self.commutative = ring.commutative
        self.predicates = ring_predicates(ring)
        self.spectrum = spectrum(ring)
        self.crt = crt_decompose(ring) if self.commutative else None
        self.field_orders = [f.order for f in self.crt] if self.crt else None
        if self.commutative:
            self.coann = coann_ideal_graph(ring)
            self.coann_shape = shape_classify(self.coann)
        else:
            self.coann = self.coann_shape = None

    # helpers ---------------------------------------------------------------
    def label(self, x):
        return self.ring.element_labels[x]

    def pair(self, x, y):
        """``[x, y, adjacent-in-graph]`` for two ring elements."""
        g = self.graph
        adjacent = g.has_edge(g.vertex_of(x), g.vertex_of(y))
        return [self.label(x), self.label(y), adjacent]

    def nonadjacent_pair(self):
        g = self.graph
        for i in range(g.vertex_count):
            for j in range(i + 1, g.vertex_count):
                if not g.has_edge(i, j):
                    return self.pair(g.vertex_ids[i], g.vertex_ids[j])
        return None

    def first_edge(self):
        edges = self.graph.edges()
        if not edges:
            return None
        i, j = edges[0]
        return self.pair(self.graph.vertex_ids[i], self.graph.vertex_ids[j])

    def nonunit_with_trivial_annihilator(self):
        side = "two_sided" if self.commutative else "left"
        for x in range(self.ring.order):
            if x in self.classes.units:
                continue
            if annihilator(self.ring, x, side).is_zero_only():
                return x
        return None

    def ideal_str(self, I):
        return "{" + ",".join(self.label(x) for x in I.indices()) + "}"

    def is_two_fields(self):
        return self.field_orders is not None and len(self.field_orders) == 2

    def local_square_zero(self):
        """(local, m = {0,x}, x^2 = 0) together with x, or (False, None)."""
        if not self.predicates.local:
            return False, None
        m = self.spectrum.maximal_ideals[0]
        if len(m) != 2:
            return False, None
        x = [e for e in m.indices() if e != 0][0]
        return int(self.ring.mul(x, x)) == 0, x

    @cached_property
    def principal_maximal(self):
        principal = set(principal_ideals(self.ring))
        return [m for m in self.spectrum.maximal_ideals if m in principal]


# ---------------------------------------------------------------------------
# individual checks; each returns (verdict, detail, counterexample)

def _ok(cond, detail, counterexample=None):
    return (PASS, detail, None) if cond else (FAIL, detail, counterexample or {})


def _needs_commutative(a):
    if not a.commutative:
        return (INAPPLICABLE, "stated for commutative rings", None)
    return None


def check_empty_graph(a):
    if (r := _needs_commutative(a)):
        return r
    rep = a.report
    bad = a.nonunit_with_trivial_annihilator()
    local = a.predicates.local
    notes = []
    if rep.is_empty_graph:
        if not local or bad is not None:
            return FAIL, "ZA(R) has no edges but the conclusion fails", {
                "maximal_ideals": [a.ideal_str(m) for m in a.spectrum.maximal_ideals],
                "nonunit_with_zero_annihilator": None if bad is None else a.label(bad)}
        notes.append("forward: empty, local, all nonunit annihilators nonzero")
    else:
        notes.append("forward: antecedent false (ZA has edges)")
    if a.predicates.bezout:
        if local and bad is None:
            if not rep.is_empty_graph:
                return FAIL, "Bezout local ring with nonzero annihilators but ZA has an edge", {
                    "pairs": [a.first_edge()]}
            notes.append("converse: holds")
        else:
            notes.append("converse: antecedent false")
    else:
        notes.append("converse: inapplicable (not Bezout)")
    return PASS, "; ".join(notes), None


def check_idempotent_adjacency(a):
    ring = a.ring
    idem = [e for e in a.classes.idempotents.indices() if e not in (0, ring.one_index)]
    if not idem:
        return INAPPLICABLE, "no nontrivial idempotents", None
    pairs = []
    for e in idem:
        f = int(ring.sub(ring.one_index, e))
        pairs.append(a.pair(e, f))
    broken = [p for p in pairs if not p[2]]
    return _ok(not broken, f"{len(idem)} nontrivial idempotents, each adjacent to its complement",
               {"pairs": broken})


def check_chained_empty(a):
    if (r := _needs_commutative(a)):
        return r
    if not a.predicates.chained:
        return INAPPLICABLE, "ideals are not totally ordered", None
    return _ok(a.report.is_empty_graph, "chained ring with edgeless ZA(R)",
               {"pairs": [a.first_edge()]})


def check_bipartite_classification(a):
    if (r := _needs_commutative(a)):
        return r
    if not a.predicates.bezout:
        return INAPPLICABLE, "not Bezout", None
    rep = a.report
    c1 = rep.is_bipartite and rep.vertex_count > 0 and rep.min_degree > 0
    c2 = rep.is_complete_bipartite
    c3 = a.is_two_fields()
    detail = f"bipartite&delta>0={c1}, complete bipartite={c2}, two fields={c3}"
    return _ok(c1 == c2 == c3, detail, {
        "bipartite_min_degree_positive": c1, "complete_bipartite": c2,
        "field_orders": a.field_orders, "bipartition": rep.bipartition,
        "pairs": [] if c2 or not c1 else [a.nonadjacent_pair()]})


def matrix_witnesses(ring):
    """Three pairwise adjacent matrices from the girth argument."""
    base = ring.meta["base"]
    k = ring.meta["size"]
    one, zero = base.one_index, base.zero_index
    from .ring import matrix_index

    def mat(entries):
        return matrix_index(ring, [[one if (i, j) in entries else zero for j in range(k)]
                                   for i in range(k)])

    if k == 2:
        return [mat({(0, 0)}), mat({(1, 0)}), mat({(0, 1), (1, 1)})]
    tail = {(i, i) for i in range(2, k)}
    return [mat({(0, 0), (1, 1)}), mat({(0, 0)} | tail), mat({(1, 1)} | tail)]


def check_matrix_girth(a):
    ring = a.ring
    if ring.kind != "matrix" or ring.meta["size"] < 2:
        return INAPPLICABLE, "not a matrix ring M_n with n >= 2", None
    witnesses = matrix_witnesses(ring)
    pairs = [a.pair(x, y) for x, y in itertools.combinations(witnesses, 2)]
    ok = a.report.girth == 3 and all(p[2] for p in pairs)
    return _ok(ok, f"girth={_num(a.report.girth)}, witness triangle adjacent={all(p[2] for p in pairs)}",
               {"girth": _num(a.report.girth), "pairs": [p for p in pairs if not p[2]]})


def check_connected_semiprimitive(a):
    if (r := _needs_commutative(a)):
        return r
    if not a.predicates.semiprimitive or not a.principal_maximal:
        return INAPPLICABLE, "needs Jac(R) = 0 and a principal maximal ideal", None
    rep = a.report
    ok = rep.is_connected and rep.diameter <= 4
    return _ok(ok, f"connected={rep.is_connected}, diameter={_num(rep.diameter)}",
               {"components": rep.component_count, "diameter": _num(rep.diameter)})


def _conn2_conclusion(a):
    jac = a.spectrum.jacobson_radical
    if jac.is_zero:
        return True, "Jac(R) = 0"
    vertices = a.graph.vertex_ids
    if len(jac) == 2 and len(vertices) == 1 and vertices[0] in jac:
        return True, f"Jac(R) = {a.ideal_str(jac)} and {a.label(vertices[0])} is the only vertex"
    return False, f"Jac(R) = {a.ideal_str(jac)} with {len(vertices)} vertices"


def check_connected_bezout(a):
    if (r := _needs_commutative(a)):
        return r
    if not a.predicates.bezout:
        return INAPPLICABLE, "not Bezout", None
    if not a.report.is_connected:
        return PASS, f"antecedent false (ZA disconnected); {CONN2_BRANCH_NOTE}", None
    ok, why = _conn2_conclusion(a)
    return _ok(ok, f"{why}; {CONN2_BRANCH_NOTE}", {"jacobson_radical": a.ideal_str(a.spectrum.jacobson_radical),
                                                   "vertex_count": a.graph.vertex_count})


def check_connected_corollary(a):
    if (r := _needs_commutative(a)):
        return r
    if not a.predicates.bezout or not a.principal_maximal:
        return INAPPLICABLE, "needs Bezout and a principal maximal ideal", None
    ok, why = _conn2_conclusion(a)
    connected = a.report.is_connected
    return _ok(connected == ok, f"connected={connected}; {why}",
               {"connected": connected, "jacobson_radical": a.ideal_str(a.spectrum.jacobson_radical),
                "vertex_count": a.graph.vertex_count})


def expected_field_product_diameter(orders):
    if len(orders) == 2:
        return 1 if orders == [2, 2] else 2
    return 3


def check_field_product_diameter(a):
    if not a.field_orders or len(a.field_orders) < 2:
        return INAPPLICABLE, "not a product of at least two fields", None
    want = expected_field_product_diameter(a.field_orders)
    rep = a.report
    ok = rep.is_connected and rep.diameter == want
    return _ok(ok, f"fields {a.field_orders}: diameter {_num(rep.diameter)}, expected {want}",
               {"field_orders": a.field_orders, "diameter": _num(rep.diameter), "expected": want})


def check_star_max_ideals(a):
    if (r := _needs_commutative(a)):
        return r
    if not a.report.is_star:
        return PASS, "antecedent false (not a star)", None
    n = len(a.spectrum.maximal_ideals)
    return _ok(n <= 2, f"star with {n} maximal ideal(s)",
               {"maximal_ideals": [a.ideal_str(m) for m in a.spectrum.maximal_ideals]})


def check_star_classification(a):
    if (r := _needs_commutative(a)):
        return r
    if not a.predicates.bezout or a.predicates.field:
        return INAPPLICABLE, "needs a Bezout ring that is not a field", None
    case1, x = a.local_square_zero()
    case2 = a.is_two_fields() and 2 in a.field_orders
    star = a.report.is_star
    detail = f"star={star}, local m={{0,x}} x^2=0: {case1}, Z2 x F: {case2}"
    payload = {"star": star, "field_orders": a.field_orders,
               "maximal_ideals": [a.ideal_str(m) for m in a.spectrum.maximal_ideals]}
    return _ok(star == (case1 or case2), detail, payload)


def check_complete_implies_coann(a):
    if (r := _needs_commutative(a)):
        return r
    if not a.report.is_complete:
        return PASS, "antecedent false (ZA not complete)", None
    ok = a.coann_shape.is_complete
    return _ok(ok, f"ZA complete, A_R complete={ok}",
               {"coann_vertices": list(a.coann.vertex_labels), "coann_edges": a.coann.edges()})


def check_coann_converse(a):
    if (r := _needs_commutative(a)):
        return r
    if a.coann_shape.is_complete and not a.report.is_complete:
        pair = a.nonadjacent_pair()
        # a verified witness that completeness of A_R does not force ZA complete
        ok = pair is not None and not pair[2] and not za_adjacent(
            a.ring, a.ring.element(pair[0]), a.ring.element(pair[1]))
        return _ok(ok, f"A_R complete on {a.coann.vertex_count} ideals, ZA not complete: "
                       f"{pair[0]} and {pair[1]} non-adjacent", {"pairs": [pair]})
    return INAPPLICABLE, "not a witness (A_R incomplete or ZA complete)", None


def check_complete_classification(a):
    if (r := _needs_commutative(a)):
        return r
    one_vertex = a.graph.vertex_count == 1
    domain = a.predicates.integral_domain
    z2z2 = a.field_orders == [2, 2]
    complete = a.report.is_complete
    detail = f"complete={complete}; one nonzero nonunit={one_vertex}, domain={domain}, Z2 x Z2={z2z2}"
    # a pair whose claimed adjacency is what the verdict rests on
    pair = a.first_edge() if complete else a.nonadjacent_pair()
    return _ok(complete == (one_vertex or domain or z2z2), detail,
               {"complete": complete, "field_orders": a.field_orders,
                "pairs": [pair] if pair else []})


def _positive_regular(a):
    k = a.report.regular_k
    return k if k is not None and k > 0 else None


def check_regular_classification(a):
    if (r := _needs_commutative(a)):
        return r
    if not a.predicates.bezout:
        return INAPPLICABLE, "not Bezout", None
    k = _positive_regular(a)
    equal_pair = a.is_two_fields() and a.field_orders[0] == a.field_orders[1]
    if k is None:
        return _ok(not equal_pair, "not k-regular with k > 0",
                   {"field_orders": a.field_orders, "degree_sequence": list(a.report.degree_sequence)})
    ok = equal_pair and a.field_orders == [k + 1, k + 1]
    return _ok(ok, f"{k}-regular, fields {a.field_orders}", {"k": k, "field_orders": a.field_orders})


def check_regular_prime_power(a):
    if (r := _needs_commutative(a)):
        return r
    if not a.predicates.bezout:
        return INAPPLICABLE, "not Bezout", None
    k = _positive_regular(a)
    if k is None:
        return PASS, "antecedent false (not k-regular with k > 0)", None
    return _ok(prime_power(k + 1) is not None, f"{k}-regular, k+1 = {k + 1}", {"k": k})


def check_reduced_product(a):
    if (r := _needs_commutative(a)):
        return r
    if not a.predicates.reduced:
        return INAPPLICABLE, "not reduced", None
    return _ok(a.crt is not None, f"reduced, field orders {a.field_orders}",
               {"jacobson_radical": a.ideal_str(a.spectrum.jacobson_radical)})


def check_prime_pair_adjacency(a):
    if (r := _needs_commutative(a)):
        return r
    primes = a.spectrum.prime_ideals
    checked, broken = 0, []
    for P, Q in itertools.combinations(primes, 2):
        if not (P.members & Q.members).is_zero_only():
            continue
        for x in P.indices():
            for y in Q.indices():
                if x and y:
                    checked += 1
                    pair = a.pair(x, y)
                    if not pair[2]:
                        broken.append(pair)
    if not checked:
        return INAPPLICABLE, "no pair of primes meeting in 0", None
    return _ok(not broken, f"{checked} cross pairs adjacent", {"pairs": broken[:5]})


def check_clique_lower_bound(a):
    omega = a.report.clique_number
    bounds = []
    minimal = a.spectrum.minimal_primes
    if a.commutative and len(minimal) >= 2 and all(not P.is_zero for P in minimal):
        bounds.append(("minimal primes", len(minimal)))
    node = a.entry.spec
    if isinstance(node, Product):
        bounds.append(("product factors", len(node.items)))
    if not bounds:
        return INAPPLICABLE, "neither several nonzero minimal primes nor an explicit product", None
    need = max(n for _, n in bounds)
    text = ", ".join(f"{name}={n}" for name, n in bounds)
    clique = [a.label(a.graph.vertex_ids[v]) for v in max_clique(a.graph, a.budget_ms)]
    return _ok(omega >= need, f"omega={omega}; {text}", {"omega": omega, "clique": clique})


def check_chi_ge_omega(a):
    rep = a.report
    return _ok(rep.chromatic_number >= rep.clique_number,
               f"chi={rep.chromatic_number}, omega={rep.clique_number}",
               {"chi": rep.chromatic_number, "omega": rep.clique_number})


CLASSIFICATION_CHECKS = {
    "empty-graph": check_empty_graph,
    "bipartite-classification": check_bipartite_classification,
    "star-max-ideals": check_star_max_ideals,
    "star-classification": check_star_classification,
    "complete-classification": check_complete_classification,
    "regular-classification": check_regular_classification,
    "regular-prime-power": check_regular_prime_power,
}
METRIC_CHECKS = {
    "field-product-diameter": check_field_product_diameter,
    "connected-semiprimitive": check_connected_semiprimitive,
    "connected-bezout": check_connected_bezout,
    "connected-corollary": check_connected_corollary,
    "matrix-girth": check_matrix_girth,
}
STRUCTURE_CHECKS = {
    "idempotent-adjacency": check_idempotent_adjacency,
    "chained-empty": check_chained_empty,
    "prime-pair-adjacency": check_prime_pair_adjacency,
    "clique-lower-bound": check_clique_lower_bound,
    "complete-implies-coann-complete": check_complete_implies_coann,
    "coann-converse-witness": check_coann_converse,
    "chi-ge-omega": check_chi_ge_omega,
    "reduced-product-of-fields": check_reduced_product,
}
ALL_CHECKS = {**CLASSIFICATION_CHECKS, **METRIC_CHECKS, **STRUCTURE_CHECKS}
CHECK_ORDER = tuple(t.id for t in THEOREMS if t.kind == "runtime")

assert set(ALL_CHECKS) == set(CHECK_ORDER), "check registry out of sync with the theorem table"


# ---------------------------------------------------------------------------
# records and reports

def _num(v):
    return "inf" if v == INF else v


@dataclass
class CheckRecord:
    check: str
    ring: str
    verdict: str
    detail: str = ""
    counterexample: dict = None
    elapsed_ms: float = 0.0

    def to_dict(self, timings=False) -> dict:
        out = {"check": self.check, "ring": self.ring, "verdict": self.verdict,
               "detail": self.detail, "counterexample": self.counterexample}
        if timings:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out


def _run(checks, analysis):
    records = []
    for check_id, fn in checks.items():
        start = time.perf_counter()
        verdict, detail, cex = fn(analysis)
        if verdict == FAIL and cex is None:
            cex = {}
        records.append(CheckRecord(check_id, analysis.entry.provenance, verdict, detail, cex,
                                   (time.perf_counter() - start) * 1000.0))
    return records


def check_classifications(analysis):
    return _run(CLASSIFICATION_CHECKS, analysis)


def check_metrics(analysis):
    return _run(METRIC_CHECKS, analysis)


def check_structure_lemmas(analysis):
    return _run(STRUCTURE_CHECKS, analysis)


def check_entry(entry, budget_ms=DEFAULT_BUDGET_MS, graph_filter=None) -> list:
    """All runtime checks for one entry, in theorem-table order."""
    try:
        analysis = Analysis(entry, budget_ms, graph_filter)
    except (BudgetExceeded, CapacityError) as exc:
        return [CheckRecord(cid, entry.provenance, SKIPPED, f"{type(exc).__name__}: {exc}")
                for cid in CHECK_ORDER]
    records = (check_classifications(analysis) + check_metrics(analysis)
               + check_structure_lemmas(analysis))
    by_id = {r.check: r for r in records}
    return [by_id[cid] for cid in CHECK_ORDER]


@dataclass
class TheoremReport:
    records: list = field(default_factory=list)
    ring_count: int = 0

    def counts(self) -> dict:
        out = {PASS: 0, FAIL: 0, INAPPLICABLE: 0, SKIPPED: 0}
        for r in self.records:
            out[r.verdict] += 1
        return out

    @property
    def failed(self) -> bool:
        return any(r.verdict == FAIL for r in self.records)

    def failures(self) -> list:
        return [r for r in self.records if r.verdict == FAIL]

    def by_check(self, check_id) -> list:
        return [r for r in self.records if r.check == check_id]

    def to_jsonl(self, timings=False) -> str:
        return "".join(json.dumps(r.to_dict(timings), sort_keys=False) + "\n" for r in self.records)

    def to_text(self, timings=False) -> str:
        c = self.counts()
        lines = [
            f"rings: {self.ring_count}  checks: {len(self.records)}  pass: {c[PASS]}  "
            f"fail: {c[FAIL]}  inapplicable: {c[INAPPLICABLE]}  skipped: {c[SKIPPED]}",
        ]
        for t in THEOREMS:
            if t.kind != "runtime":
                lines.append(f"[documented] {t.id}: {t.statement}")
        for r in self.records:
            line = f"[{r.verdict}] {r.check} | {r.ring} | {r.detail}"
            if r.counterexample:
                line += " | counterexample " + json.dumps(r.counterexample)
            if timings:
                line += f" | {r.elapsed_ms:.1f} ms"
            lines.append(line)
        lines.append("RESULT: " + ("FAIL" if self.failed else "PASS"))
        return "\n".join(lines) + "\n"


def run_suite(catalog, budget_ms=DEFAULT_BUDGET_MS, graph_filter=None) -> TheoremReport:
    report = TheoremReport(ring_count=len(catalog))
    for entry in catalog:
        report.records.extend(check_entry(entry, budget_ms, graph_filter))
    return report


def reverify(record: CheckRecord) -> bool:
    """Re-check the ZA adjacency claims of a counterexample from the definition.

    Returns True when every ``[x, y, adjacent]`` claim agrees with a fresh
    annihilator computation (so the failure is not an artifact of the graph
    the check was given).
    """
    pairs = (record.counterexample or {}).get("pairs") or []
    if not pairs:
        return True
    ring = elaborate(record.ring)
    return all(za_adjacent(ring, ring.element(x), ring.element(y)) == claimed
               for x, y, claimed in (p for p in pairs if p))
