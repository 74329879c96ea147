"""Builders for ZA(R), the co-annihilating ideal graph A_R and Gamma(R)."""
from dataclasses import dataclass

import numpy as np

from . import kernels
from .ideals import all_ideals, ideal_annihilator, ideal_label
from .ring import (
    FiniteRing,
    _check_side,
    annihilator,
    annihilator_matrix,
    classify_elements,
    default_side,
)

ZA = "ZA"
COANN = "COANN"
ZERODIV = "ZERODIV"


@dataclass(frozen=True, eq=False)
class SimpleGraph:
    kind: str
    ring_label: str
    vertex_labels: tuple
    adjacency: np.ndarray
    # ring element indices (ZA, ZERODIV) or Ideal objects (COANN)
    vertex_ids: tuple = ()

    def __post_init__(self):
        adj = np.array(self.adjacency, dtype=bool)
        adj.setflags(write=False)
        object.__setattr__(self, "adjacency", adj)
        if not self.vertex_ids:
            object.__setattr__(self, "vertex_ids", tuple(range(len(self.vertex_labels))))

    @property
    def vertex_count(self) -> int:
        return len(self.vertex_labels)

    @property
    def edge_count(self) -> int:
        return int(np.triu(self.adjacency, 1).sum())

    def edges(self) -> list:
        rows, cols = np.nonzero(np.triu(self.adjacency, 1))
        return [(int(i), int(j)) for i, j in zip(rows, cols)]

    def neighbors(self, v: int) -> list:
        return [int(u) for u in np.flatnonzero(self.adjacency[v])]

    def degrees(self) -> list:
        return [int(d) for d in self.adjacency.sum(axis=1)]

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i, j])

    def vertex_of(self, ident) -> int:
        return self.vertex_ids.index(ident)

    def with_adjacency(self, adjacency) -> "SimpleGraph":
        return SimpleGraph(self.kind, self.ring_label, self.vertex_labels, adjacency, self.vertex_ids)

    def __repr__(self) -> str:
        return f"<SimpleGraph {self.kind}({self.ring_label}) V={self.vertex_count} E={self.edge_count}>"


def za_graph(ring: FiniteRing, side=None) -> SimpleGraph:
    """Nonzero nonunits, adjacent when their annihilators meet only in 0."""
    side = default_side(ring) if side is None else _check_side(side)
    vertices = classify_elements(ring).nonzero_nonunits.indices()
    ann = annihilator_matrix(ring, side)[vertices][:, 1:]
    adj = kernels.trivial_meet_matrix(ann)
    return SimpleGraph(ZA, ring.label, tuple(ring.element_labels[v] for v in vertices), adj,
                       tuple(vertices))


def coann_ideal_graph(ring: FiniteRing) -> SimpleGraph:
    """Nonzero proper ideals, adjacent when their annihilators meet only in 0."""
    ideals = [I for I in all_ideals(ring) if not I.is_zero and not I.is_whole]
    if not ideals:
        return SimpleGraph(COANN, ring.label, (), np.zeros((0, 0), dtype=bool), ())
    ann = np.array([ideal_annihilator(ring, I).members.members for I in ideals])[:, 1:]
    adj = kernels.trivial_meet_matrix(ann)
    return SimpleGraph(COANN, ring.label, tuple(ideal_label(ring, I) for I in ideals), adj,
                       tuple(ideals))


def zero_divisor_graph(ring: FiniteRing) -> SimpleGraph:
    """Nonzero zero divisors, adjacent when xy = 0 or yx = 0."""
    vertices = [x for x in classify_elements(ring).zero_divisors.indices() if x != ring.zero_index]
    v = np.array(vertices, dtype=np.int64)
    if v.size == 0:
        return SimpleGraph(ZERODIV, ring.label, (), np.zeros((0, 0), dtype=bool), ())
    mul = ring.mul_table[np.ix_(v, v)]
    adj = (mul == ring.zero_index) | (mul.T == ring.zero_index)
    np.fill_diagonal(adj, False)
    return SimpleGraph(ZERODIV, ring.label, tuple(ring.element_labels[x] for x in vertices), adj,
                       tuple(vertices))


GRAPH_BUILDERS = {"za": za_graph, "coann": coann_ideal_graph, "zd": zero_divisor_graph}


def za_adjacent(ring: FiniteRing, x: int, y: int, side=None) -> bool:
    """Adjacency straight from the definition, one pair at a time."""
    side = default_side(ring) if side is None else side
    if x == y:
        return False
    return (annihilator(ring, x, side) & annihilator(ring, y, side)).is_zero_only()
