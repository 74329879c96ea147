"""Exact graph invariants: distances, girth, degrees, shapes, omega and chi."""
from dataclasses import dataclass
import math
import time

import numpy as np

from . import kernels
from ._accel import USE_NUMBA
from .errors import BudgetExceeded

INF = math.inf
DEFAULT_BUDGET_MS = 10_000
# conversion from a millisecond budget to a kernel step cap; deliberately
# generous, the wall clock is checked as well
_STEPS_PER_MS = 20_000 if USE_NUMBA else 200


def _adj(G):
    return np.ascontiguousarray(G.adjacency if hasattr(G, "adjacency") else G, dtype=np.bool_)


@dataclass(frozen=True)
class Connectivity:
    components: tuple
    is_connected: bool
    diameter: float


def connectivity(G) -> Connectivity:
    """Components and diameter.

    A graph with at most one vertex is connected with diameter 0; a
    disconnected graph has infinite diameter.
    """
    adj = _adj(G)
    v = adj.shape[0]
    if v == 0:
        return Connectivity((), True, 0)
    dist = kernels.bfs_distances(adj)
    seen = np.zeros(v, dtype=bool)
    components = []
    for s in range(v):
        if not seen[s]:
            comp = np.flatnonzero(dist[s] >= 0)
            seen[comp] = True
            components.append(tuple(int(c) for c in comp))
    connected = len(components) == 1
    diameter = int(dist.max()) if connected else INF
    return Connectivity(tuple(components), connected, diameter)


def girth(G):
    """Length of a shortest cycle, ``inf`` for forests."""
    length = int(kernels.shortest_cycle(_adj(G)))
    return length if length else INF


@dataclass(frozen=True)
class DegreeStats:
    degree_sequence: tuple
    min_degree: int = None
    regular_k: int = None


def degree_stats(G) -> DegreeStats:
    degrees = tuple(int(d) for d in _adj(G).sum(axis=1))
    if not degrees:
        return DegreeStats(())
    regular = degrees[0] if len(set(degrees)) == 1 else None
    return DegreeStats(degrees, min(degrees), regular)


def two_coloring(G):
    """BFS 2-coloring (0/1 per vertex) or None when an odd cycle exists.

    The smallest vertex of each component gets color 0.
    """
    adj = _adj(G)
    v = adj.shape[0]
    side = np.full(v, -1, dtype=np.int64)
    for s in range(v):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = [s]
        while queue:
            u = queue.pop(0)
            for w in np.flatnonzero(adj[u]):
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(int(w))
                elif side[w] == side[u]:
                    return None
    return side


@dataclass(frozen=True)
class Shape:
    is_empty_graph: bool
    is_complete: bool
    is_star: bool
    is_bipartite: bool
    is_complete_bipartite: bool
    bipartition: tuple = None


def shape_classify(G) -> Shape:
    adj = _adj(G)
    v = adj.shape[0]
    degrees = adj.sum(axis=1)
    edges = int(degrees.sum()) // 2
    empty = edges == 0
    complete = edges == v * (v - 1) // 2
    star = v >= 1 and edges == v - 1 and bool((degrees == v - 1).any())
    side = two_coloring(adj)
    bipartite = side is not None
    bipartition = None
    complete_bipartite = False
    if bipartite and v:
        ones = int(side.sum())
        bipartition = tuple(sorted((v - ones, ones)))
        complete_bipartite = (bipartition[0] > 0 and edges == bipartition[0] * bipartition[1]
                              and len(connectivity(adj).components) == 1)
    return Shape(empty, complete, star, bipartite, complete_bipartite, bipartition)


# ---------------------------------------------------------------------------
# exact omega and chi

def twin_classes(G):
    """Group vertices with identical neighborhoods (necessarily non-adjacent).

    Returns ``(representatives, class_of)``.  Such twins can share a color in
    an optimal coloring and at most one of them lies in any clique, so omega
    and chi are unchanged on the quotient graph.
    """
    adj = _adj(G)
    reps = {}
    class_of = np.empty(adj.shape[0], dtype=np.int64)
    for u in range(adj.shape[0]):
        key = adj[u].tobytes()
        if key not in reps:
            reps[key] = len(reps)
        class_of[u] = reps[key]
    first = {}
    for u in range(adj.shape[0]):
        first.setdefault(int(class_of[u]), u)
    return [first[c] for c in range(len(first))], class_of


def _reduce(G):
    adj = _adj(G)
    reps, class_of = twin_classes(adj)
    sub = np.ascontiguousarray(adj[np.ix_(reps, reps)])
    return adj, reps, class_of, sub


class _Deadline:
    def __init__(self, budget_ms):
        self.budget_ms = budget_ms
        self.end = time.perf_counter() + budget_ms / 1000.0

    def steps(self):
        remaining = (self.end - time.perf_counter()) * 1000.0
        if remaining <= 0:
            raise BudgetExceeded(f"exact search exceeded its {self.budget_ms} ms budget")
        return max(1, int(remaining * _STEPS_PER_MS))

    def check(self, status):
        if status < 0 or time.perf_counter() > self.end:
            raise BudgetExceeded(f"exact search exceeded its {self.budget_ms} ms budget")


def max_clique(G, budget_ms=DEFAULT_BUDGET_MS) -> list:
    """Vertices of a maximum clique (exact)."""
    adj, reps, _, sub = _reduce(G)
    if adj.shape[0] == 0:
        return []
    deadline = _Deadline(budget_ms)
    size, members, _ = kernels.max_clique_kernel(sub, deadline.steps())
    deadline.check(size)
    return sorted(reps[int(m)] for m in members[:size])


def clique_number(G, budget_ms=DEFAULT_BUDGET_MS) -> int:
    return len(max_clique(G, budget_ms))


def dsatur_order(adj) -> np.ndarray:
    """Saturation-degree vertex order, ties broken by degree then index."""
    v = adj.shape[0]
    degree = adj.sum(axis=1)
    colors = np.full(v, -1, dtype=np.int64)
    neighbor_colors = [set() for _ in range(v)]
    order = []
    for _ in range(v):
        candidates = [u for u in range(v) if colors[u] < 0]
        u = min(candidates, key=lambda w: (-len(neighbor_colors[w]), -int(degree[w]), w))
        c = 0
        while c in neighbor_colors[u]:
            c += 1
        colors[u] = c
        for w in np.flatnonzero(adj[u]):
            neighbor_colors[w].add(c)
        order.append(u)
    return np.array(order, dtype=np.int64)


def optimal_coloring(G, budget_ms=DEFAULT_BUDGET_MS) -> list:
    """A proper coloring with the minimum number of colors (exact)."""
    adj, reps, class_of, sub = _reduce(G)
    v = adj.shape[0]
    if v == 0:
        return []
    deadline = _Deadline(budget_ms)
    order = dsatur_order(sub)
    best = kernels.greedy_coloring(sub, order)
    upper = int(best.max()) + 1
    lower, _, _ = kernels.max_clique_kernel(sub, deadline.steps())
    deadline.check(lower)
    for k in range(int(lower), upper):
        status, colors, _ = kernels.k_colorable_kernel(sub, order, k, deadline.steps())
        deadline.check(status)
        if status == 1:
            best = colors
            break
    return [int(best[c]) for c in class_of]


def chromatic_number(G, budget_ms=DEFAULT_BUDGET_MS) -> int:
    coloring = optimal_coloring(G, budget_ms)
    return max(coloring) + 1 if coloring else 0


# ---------------------------------------------------------------------------
# full report

@dataclass(frozen=True)
class InvariantReport:
    vertex_count: int
    edge_count: int
    component_count: int
    is_connected: bool
    diameter: float
    girth: float
    degree_sequence: tuple
    min_degree: int
    regular_k: int
    is_empty_graph: bool
    is_complete: bool
    is_star: bool
    is_bipartite: bool
    is_complete_bipartite: bool
    bipartition: tuple
    clique_number: int
    chromatic_number: int

    def __post_init__(self):
        assert self.chromatic_number >= self.clique_number
        assert (self.diameter != INF) == self.is_connected
        assert self.girth == INF or self.girth >= 3


def invariant_report(G, budget_ms=DEFAULT_BUDGET_MS) -> InvariantReport:
    adj = _adj(G)
    conn = connectivity(adj)
    deg = degree_stats(adj)
    shape = shape_classify(adj)
    return InvariantReport(
        vertex_count=adj.shape[0],
        edge_count=int(adj.sum()) // 2,
        component_count=len(conn.components),
        is_connected=conn.is_connected,
        diameter=conn.diameter,
        girth=girth(adj),
        degree_sequence=deg.degree_sequence,
        min_degree=deg.min_degree,
        regular_k=deg.regular_k,
        is_empty_graph=shape.is_empty_graph,
        is_complete=shape.is_complete,
        is_star=shape.is_star,
        is_bipartite=shape.is_bipartite,
        is_complete_bipartite=shape.is_complete_bipartite,
        bipartition=shape.bipartition,
        clique_number=clique_number(adj, budget_ms),
        chromatic_number=chromatic_number(adj, budget_ms),
    )
