"""Graphs built on a ring's carrier from a clean-element set.

The weakly nil clean graph has the ring elements as vertices and an edge
{x, y} exactly when x != y and x + y is weakly nil clean; the nil clean
graph uses the nil clean set instead and is always a subgraph. Both are
simple and loop-free. Adjacency is stored as one bitset row per vertex so
neighborhood intersections and clique search are single AND operations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .bitsets import iter_bits
from .classify import Classification
from .rings import FiniteRing, RingSpec

WEAKLY_NIL_CLEAN = "weakly-nil-clean"
NIL_CLEAN = "nil-clean"


@dataclass
class WncGraph:
    vertex_count: int
    adjacency: list[int]  # bitset row per vertex
    ring_spec: Optional[RingSpec]
    kind: str
    # provenance for the degree post-check; None for synthetic test graphs
    clean_set: Optional[int] = None
    ring: Optional[FiniteRing] = field(default=None, repr=False)


def _build(ring: FiniteRing, clean: int, kind: str) -> WncGraph:
    n = ring.size
    add = ring.add
    rows = [0] * n
    # u is adjacent to v iff u = s - v for some clean sum s, u != v
    for v in range(n):
        nv = ring.neg(v)
        row = 0
        m = clean
        while m:
            low = m & -m
            m ^= low
            u = add(low.bit_length() - 1, nv)
            if u != v:
                row |= 1 << u
        rows[v] = row
    return WncGraph(vertex_count=n, adjacency=rows, ring_spec=ring.spec,
                    kind=kind, clean_set=clean, ring=ring)


def build_wnc_graph(ring: FiniteRing, classification: Classification) -> WncGraph:
    """The weakly nil clean graph of the ring."""
    if classification.size != ring.size:
        raise ValueError("classification does not match the ring")
    return _build(ring, classification.wnc, WEAKLY_NIL_CLEAN)


def build_nc_graph(ring: FiniteRing, classification: Classification) -> WncGraph:
    """The nil clean graph of the ring (a subgraph of the weakly nil clean one)."""
    if classification.size != ring.size:
        raise ValueError("classification does not match the ring")
    return _build(ring, classification.nc, NIL_CLEAN)


def degree(graph: WncGraph, v: int) -> int:
    """Vertex degree, cross-checked against the degree-lemma prediction.

    For graphs built from a ring, deg(v) must be |S| - 1 when v + v lies in
    the defining clean set S and |S| otherwise; a mismatch means the graph
    was built inconsistently, so it is asserted rather than assumed.
    """
    if not 0 <= v < graph.vertex_count:
        raise ValueError(f"vertex {v} out of range 0..{graph.vertex_count - 1}")
    d = graph.adjacency[v].bit_count()
    if graph.ring is not None and graph.clean_set is not None:
        ring = graph.ring
        expected = graph.clean_set.bit_count()
        if graph.clean_set >> ring.add(v, v) & 1:
            expected -= 1
        assert d == expected, f"degree {d} of vertex {v} contradicts prediction {expected}"
    return d


def neighborhood(graph: WncGraph, v: int) -> int:
    """Bitset of the neighbors of v; v itself never appears (loop-free)."""
    if not 0 <= v < graph.vertex_count:
        raise ValueError(f"vertex {v} out of range 0..{graph.vertex_count - 1}")
    return graph.adjacency[v]


def max_degree(graph: WncGraph) -> int:
    if graph.vertex_count == 0:
        return 0
    return max(row.bit_count() for row in graph.adjacency)


def edges(graph: WncGraph):
    """Yield each undirected edge once as (u, v) with u < v, in lexicographic order."""
    for u in range(graph.vertex_count):
        rest = graph.adjacency[u] >> (u + 1) << (u + 1)
        while rest:
            low = rest & -rest
            rest ^= low
            yield u, low.bit_length() - 1


def edge_count(graph: WncGraph) -> int:
    return sum(row.bit_count() for row in graph.adjacency) // 2


def is_complete(graph: WncGraph) -> bool:
    n = graph.vertex_count
    return edge_count(graph) == n * (n - 1) // 2


def make_graph(adjacency_pairs, vertex_count: int, kind: str = "synthetic") -> WncGraph:
    """Build a bare graph from an edge list; handy for tests and imports."""
    rows = [0] * vertex_count
    for u, v in adjacency_pairs:
        if u == v:
            raise ValueError("loops are not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return WncGraph(vertex_count=vertex_count, adjacency=rows, ring_spec=None,
                    kind=kind)
