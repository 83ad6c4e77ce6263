"""Validated lattice-segment hypergraphs plus a generic finite hypergraph.

A segment hypergraph has r-point segment edges with at most one edge per line;
the generic kind hosts configurations that are not segment hypergraphs (and is
the common currency for the solvers).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Hashable, Iterable

from .geometry import LatticePoint, LatticeSegment, segment_points

VertexId = Hashable


class ValidationError(ValueError):
    """Instance violates a structural requirement."""


@dataclass(frozen=True)
class GenericHypergraph:
    """Finite hypergraph on abstract vertex ids; edges are nonempty vertex sets."""

    vertices: tuple[VertexId, ...]
    edges: tuple[frozenset, ...]

    @staticmethod
    def make(vertices: Iterable[VertexId], edges: Iterable[Iterable[VertexId]]) -> "GenericHypergraph":
        vs = tuple(sorted(set(vertices)))
        vset = set(vs)
        es = []
        for e in edges:
            fe = frozenset(e)
            if not fe:
                raise ValidationError("empty edge")
            if not fe <= vset:
                raise ValidationError(f"edge {sorted(fe)} contains unknown vertices")
            es.append(fe)
        if len(set(es)) != len(es):
            raise ValidationError("duplicate edges (multi-edges are not supported)")
        es.sort(key=lambda e: tuple(sorted(e)))
        return GenericHypergraph(vs, tuple(es))

    def degree(self, v: VertexId) -> int:
        if v not in set(self.vertices):
            raise ValidationError(f"unknown vertex {v!r}")
        return sum(1 for e in self.edges if v in e)


@dataclass(frozen=True)
class SegmentHypergraph:
    """r-uniform hypergraph whose edges are segments of r consecutive lattice points.

    Vertices are the union of the edge point sets.  Edges are canonical and
    sorted, so equal instances compare equal structurally.
    """

    r: int
    edges: tuple[LatticeSegment, ...]
    vertex_index: dict[LatticePoint, tuple[int, ...]] = field(compare=False, repr=False)

    @property
    def vertices(self) -> tuple[LatticePoint, ...]:
        return tuple(sorted(self.vertex_index))

    def edge_points(self, i: int) -> list[LatticePoint]:
        return segment_points(self.edges[i])

    def degree(self, v: LatticePoint) -> int:
        if v not in self.vertex_index:
            raise ValidationError(f"unknown vertex {v}")
        return len(self.vertex_index[v])

    def to_generic(self) -> GenericHypergraph:
        verts = sorted(p.as_tuple() for p in self.vertex_index)
        es = [frozenset(p.as_tuple() for p in self.edge_points(i)) for i in range(len(self.edges))]
        return GenericHypergraph.make(verts, es)


def build(r: int, segments: Iterable[LatticeSegment]) -> SegmentHypergraph:
    """Validate and canonicalize an edge list into a segment hypergraph.

    Rejects edges whose point count differs from r and pairs of edges sharing a
    supporting line.
    """
    if r < 2:
        raise ValidationError(f"uniformity r must be >= 2, got {r}")
    segs = sorted(segments)
    for s in segs:
        if s.count != r:
            raise ValidationError(f"edge {s} has {s.count} points, expected r={r}")
    by_line: dict[tuple[int, int, int], LatticeSegment] = {}
    for s in segs:
        key = s.line_key()
        if key in by_line:
            raise ValidationError(
                f"two edges on one line: {by_line[key]} and {s}"
            )
        by_line[key] = s
    index: dict[LatticePoint, list[int]] = {}
    for i, s in enumerate(segs):
        for p in segment_points(s):
            index.setdefault(p, []).append(i)
    frozen = {p: tuple(idx) for p, idx in index.items()}
    return SegmentHypergraph(r=r, edges=tuple(segs), vertex_index=frozen)


Hypergraph = SegmentHypergraph | GenericHypergraph


def as_generic(H: Hypergraph) -> GenericHypergraph:
    return H.to_generic() if isinstance(H, SegmentHypergraph) else H


def is_intersecting(H: Hypergraph) -> bool:
    """True iff every pair of edges shares at least one vertex (vacuously true below 2 edges)."""
    G = as_generic(H)
    return all(e1 & e2 for e1, e2 in itertools.combinations(G.edges, 2))


def isolated_vertices(H: Hypergraph) -> frozenset:
    """Vertices of degree exactly 1."""
    if isinstance(H, SegmentHypergraph):
        return frozenset(p for p, idx in H.vertex_index.items() if len(idx) == 1)
    return frozenset(v for v in H.vertices if sum(1 for e in H.edges if v in e) == 1)


def degree(H: Hypergraph, v) -> int:
    if isinstance(H, SegmentHypergraph) and not isinstance(v, LatticePoint):
        v = LatticePoint(*v)
    return H.degree(v)


def max_degree(H: Hypergraph) -> int:
    if isinstance(H, SegmentHypergraph):
        return max((len(idx) for idx in H.vertex_index.values()), default=0)
    G = H
    return max((sum(1 for e in G.edges if v in e) for v in G.vertices), default=0)


@dataclass(frozen=True)
class ZkHypergraph:
    """k-uniform hypergraph on residue pairs mod k whose edges are the size-k cosets."""

    k: int
    vertices: tuple[tuple[int, int], ...]
    edges: tuple[frozenset, ...]

    def to_generic(self) -> GenericHypergraph:
        return GenericHypergraph.make(self.vertices, self.edges)


def zk_hypergraph(k: int) -> ZkHypergraph:
    """All k² residue pairs, with one edge per distinct coset u + Z_k·v of size k."""
    if k < 2:
        raise ValidationError(f"k must be >= 2, got {k}")
    verts = [(a, b) for a in range(k) for b in range(k)]
    cosets = set()
    for u in verts:
        for v in verts:
            coset = frozenset(((u[0] + t * v[0]) % k, (u[1] + t * v[1]) % k) for t in range(k))
            if len(coset) == k:
                cosets.add(coset)
    return ZkHypergraph(k=k, vertices=tuple(verts), edges=tuple(sorted(cosets, key=lambda e: tuple(sorted(e)))))


def contains_triangle(H: SegmentHypergraph) -> bool:
    """Three edges pairwise meeting at three distinct lattice points."""
    from .geometry import meet

    n = len(H.edges)
    for i, j, k in itertools.combinations(range(n), 3):
        mij = meet(H.edges[i], H.edges[j])
        if not mij.is_lattice:
            continue
        mik = meet(H.edges[i], H.edges[k])
        if not mik.is_lattice:
            continue
        mjk = meet(H.edges[j], H.edges[k])
        if not mjk.is_lattice:
            continue
        if len({mij.point, mik.point, mjk.point}) == 3:
            return True
    return False
