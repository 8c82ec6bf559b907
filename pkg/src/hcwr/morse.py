"""Morse labelings, slab/level decomposition and the quotient graph.

A labeling assigns an integer to each vertex so that every simplex spans
at most two consecutive integers (the pairwise edge condition implies the
simplex condition).  A slab is the full subcomplex on labels {i, i+1}, a
level the full subcomplex on label i.  The quotient graph has a vertex
per slab component and an edge per level component, glued by inclusion;
the homological connected width rank of a labeled complex is the max,
over slab components C, of rank im(H1(C; F) -> H1(K; F)).
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .complexes import (SimplicialComplex, Subcomplex, connected_components,
                        induced_subcomplex)
from .homology import FieldSpec, H1Calculator


class NotConnected(ValueError):
    """The construction requires a connected complex."""


class InvalidLabeling(ValueError):
    """The labeling violates the one-step simplex-span constraint."""

    def __init__(self, violations):
        self.violations = violations
        super().__init__(f"label span > 1 on simplices {sorted(violations)[:5]}"
                         + ("..." if len(violations) > 5 else ""))


@dataclass(frozen=True)
class MorseLabeling:
    """Integer label per vertex of some fixed complex."""

    labels: tuple

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))

    def __getitem__(self, v: int) -> int:
        return self.labels[v]

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def min(self) -> int:
        return min(self.labels)

    @property
    def max(self) -> int:
        return max(self.labels)

    def shifted(self, c: int) -> "MorseLabeling":
        return MorseLabeling(tuple(l + c for l in self.labels))

    def reflected(self) -> "MorseLabeling":
        return MorseLabeling(tuple(-l for l in self.labels))


def constant_labeling(K: SimplicialComplex, value: int = 0) -> MorseLabeling:
    return MorseLabeling((value,) * K.vertex_count)


def validate_labeling(K: SimplicialComplex, f: MorseLabeling) -> list:
    """All simplices whose labels span more than one step (empty = ok)."""
    if len(f) != K.vertex_count:
        raise ValueError("labeling length does not match vertex count")
    bad = []
    for s in K.simplices:
        if len(s) < 2:
            continue
        vals = [f[v] for v in s]
        if max(vals) - min(vals) > 1:
            bad.append(s)
    return sorted(bad)


def _require_valid(K, f):
    bad = validate_labeling(K, f)
    if bad:
        raise InvalidLabeling(bad)


def level(K: SimplicialComplex, f: MorseLabeling, i: int) -> Subcomplex:
    """Full subcomplex on vertices labeled exactly ``i``."""
    return induced_subcomplex(K, [v for v in range(K.vertex_count) if f[v] == i])


def slab(K: SimplicialComplex, f: MorseLabeling, i: int) -> Subcomplex:
    """Full subcomplex on vertices labeled ``i`` or ``i+1``."""
    return induced_subcomplex(
        K, [v for v in range(K.vertex_count) if f[v] in (i, i + 1)])


@dataclass(frozen=True)
class QVertex:
    slab_index: int
    component_id: int
    members: frozenset


@dataclass(frozen=True)
class QEdge:
    level_index: int
    component_id: int
    members: frozenset
    endpoints: tuple  # indices into q_vertices: (slab i-1 side, slab i side)


@dataclass
class QuotientGraph:
    q_vertices: list
    q_edges: list
    theta_vertex: dict = dc_field(repr=False)  # (slab index, K-vertex) -> qv idx
    theta_level: dict = dc_field(repr=False)   # (level index, K-vertex) -> qe idx

    @property
    def vertex_count(self) -> int:
        return len(self.q_vertices)

    @property
    def edge_count(self) -> int:
        return len(self.q_edges)


def quotient_graph(K: SimplicialComplex, f: MorseLabeling) -> QuotientGraph:
    """Slab components as vertices, level components as edges.

    Slabs run over all nonempty indices i in [min f - 1, max f]; the
    boundary slabs duplicate the extreme levels and are always leaves.
    The graph may have parallel edges.
    """
    _require_valid(K, f)
    if len(connected_components(K)) != 1:
        raise NotConnected("quotient graph requires a connected complex")
    lo, hi = f.min, f.max
    q_vertices = []
    theta_vertex = {}
    qv_at = {}  # slab index -> list of qv indices
    for i in range(lo - 1, hi + 1):
        sub = slab(K, f, i)
        comps = connected_components(sub)
        ids = []
        for cid, comp in enumerate(comps):
            idx = len(q_vertices)
            q_vertices.append(QVertex(i, cid, comp))
            ids.append(idx)
            for v in comp:
                theta_vertex[(i, v)] = idx
        qv_at[i] = ids
    q_edges = []
    theta_level = {}
    for i in range(lo, hi + 1):
        sub = level(K, f, i)
        for cid, comp in enumerate(connected_components(sub)):
            rep = min(comp)
            left = theta_vertex[(i - 1, rep)]
            right = theta_vertex[(i, rep)]
            idx = len(q_edges)
            q_edges.append(QEdge(i, cid, comp, (left, right)))
            for v in comp:
                theta_level[(i, v)] = idx
    return QuotientGraph(q_vertices, q_edges, theta_vertex, theta_level)


def qf_betti1(Q: QuotientGraph) -> int:
    """#edges - #vertices + #components of the (multi)graph."""
    n = Q.vertex_count
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n
    for e in Q.q_edges:
        a, b = find(e.endpoints[0]), find(e.endpoints[1])
        if a != b:
            parent[a] = b
            comps -= 1
    return Q.edge_count - n + comps


@dataclass(frozen=True)
class SlabRank:
    slab_index: int
    component_id: int
    size: int
    rank: int


@dataclass
class WidthReport:
    """Per-slab image ranks and the quotient-graph classification.

    ``max_rank`` is the homological connected width rank of the labeled
    complex over ``field``; it lower-bounds the group-theoretic quantity
    defined through pi_1 and equals it whenever pi_1 is abelian and the
    field matches the torsion.
    """

    per_slab: list
    max_rank: int
    argmax: list
    qf_vertex_count: int
    qf_edge_count: int
    qf_betti1: int
    qf_class: str
    field: FieldSpec

    def to_json(self) -> dict:
        return {
            "field": self.field.label,
            "max_rank": self.max_rank,
            "qf": {
                "vertices": self.qf_vertex_count,
                "edges": self.qf_edge_count,
                "betti1": self.qf_betti1,
                "class": self.qf_class,
            },
            "slabs": [
                {"i": s.slab_index, "component": s.component_id,
                 "size": s.size, "rank": s.rank}
                for s in self.per_slab
            ],
        }


def _qf_class(b1: int) -> str:
    if b1 == 0:
        return "tree"
    if b1 == 1:
        return "circle"
    return "other"


def hcwr_value(K: SimplicialComplex, f: MorseLabeling,
               F: FieldSpec, calc: Optional[H1Calculator] = None) -> WidthReport:
    """Evaluate the homological connected width rank of (K, f) over F."""
    Q = quotient_graph(K, f)  # also validates f and connectivity
    if calc is None:
        calc = H1Calculator(K, F)
    per_slab = []
    max_rank = 0
    for qv in Q.q_vertices:
        r = calc.image_rank_of_vertices(qv.members)
        per_slab.append(SlabRank(qv.slab_index, qv.component_id,
                                 len(qv.members), r))
        max_rank = max(max_rank, r)
    argmax = [(s.slab_index, s.component_id)
              for s in per_slab if s.rank == max_rank]
    b1 = qf_betti1(Q)
    return WidthReport(per_slab=per_slab, max_rank=max_rank, argmax=argmax,
                       qf_vertex_count=Q.vertex_count,
                       qf_edge_count=Q.edge_count,
                       qf_betti1=b1, qf_class=_qf_class(b1), field=F)
