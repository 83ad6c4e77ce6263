"""Exact covering, matching, and chromatic numbers with optimal witnesses.

Branch-and-bound / backtracking, deterministic: all tie-breaks follow canonical
vertex and edge order, so witnesses are reproducible run to run.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .hypergraph import GenericHypergraph, Hypergraph, ValidationError, as_generic


class NodeLimitExceeded(RuntimeError):
    """Search budget exhausted before optimality was certified."""


@dataclass(frozen=True)
class Cover:
    vertices: frozenset

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class Matching:
    edges: frozenset  # edge indices into the instance's canonical edge order

    @property
    def size(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Coloring:
    assignment: dict
    num_colors: int

    def __hash__(self) -> int:
        return hash((frozenset(self.assignment.items()), self.num_colors))


class _Budget:
    def __init__(self, node_limit: int | None):
        self.limit = node_limit
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise NodeLimitExceeded(f"exceeded node limit {self.limit}")


def _greedy_disjoint(edges: list[frozenset]) -> int:
    """Size of a greedily built pairwise-disjoint edge set (cover lower bound)."""
    used: set = set()
    n = 0
    for e in edges:
        if not (e & used):
            used |= e
            n += 1
    return n


def covering_number(H: Hypergraph, node_limit: int | None = None) -> tuple[int, Cover]:
    """Minimum hitting set by branch-and-bound.

    Branches over the vertices of an uncovered edge with fewest vertices outside
    the current cover; prunes with the greedy disjoint-edge lower bound.
    """
    G = as_generic(H)
    edges = [frozenset(sorted(e)) for e in G.edges]
    if not edges:
        return 0, Cover(frozenset())
    budget = _Budget(node_limit)

    # Greedy warm start: repeatedly take the vertex hitting the most uncovered edges.
    chosen: set = set()
    remaining = list(edges)
    while remaining:
        counts: dict = {}
        for e in remaining:
            for v in e:
                counts[v] = counts.get(v, 0) + 1
        v = min(counts, key=lambda u: (-counts[u], u))
        chosen.add(v)
        remaining = [e for e in remaining if v not in e]
    best_size = len(chosen)
    best = frozenset(chosen)

    def recurse(cover: set) -> None:
        nonlocal best_size, best
        budget.tick()
        uncovered = [e for e in edges if not (e & cover)]
        if not uncovered:
            if len(cover) < best_size:
                best_size = len(cover)
                best = frozenset(cover)
            return
        if len(cover) + _greedy_disjoint(uncovered) >= best_size:
            return
        branch_edge = min(uncovered, key=lambda e: (len(e), tuple(sorted(e))))
        for v in sorted(branch_edge):
            cover.add(v)
            recurse(cover)
            cover.remove(v)

    recurse(set())
    assert all(e & best for e in edges)
    return best_size, Cover(best)


def matching_number(H: Hypergraph, node_limit: int | None = None) -> tuple[int, Matching]:
    """Maximum set of pairwise vertex-disjoint edges by exhaustive branch-and-bound."""
    G = as_generic(H)
    edges = list(G.edges)
    budget = _Budget(node_limit)
    best_size = 0
    best: frozenset = frozenset()

    def recurse(i: int, picked: list[int], used: set) -> None:
        nonlocal best_size, best
        budget.tick()
        if len(picked) > best_size:
            best_size = len(picked)
            best = frozenset(picked)
        if i == len(edges) or len(picked) + (len(edges) - i) <= best_size:
            return
        if not (edges[i] & used):
            picked.append(i)
            recurse(i + 1, picked, used | edges[i])
            picked.pop()
        recurse(i + 1, picked, used)

    recurse(0, [], set())
    return best_size, Matching(best)


def _order_vertices(G: GenericHypergraph) -> list:
    deg = {v: 0 for v in G.vertices}
    for e in G.edges:
        for v in e:
            deg[v] += 1
    return sorted(G.vertices, key=lambda v: (-deg[v], v))


def k_colorable(H: Hypergraph, k: int, node_limit: int | None = None) -> Coloring | None:
    """A proper k-coloring (no monochromatic edge) or None if none exists.

    Backtracking over vertices in decreasing-degree order with unit propagation:
    once all but one vertex of an edge share a color, that color is barred from
    the last vertex; a vertex barred from every color forces a backtrack.  The
    first vertex is pinned to color 0 (color-permutation symmetry).
    """
    if k < 1:
        raise ValidationError(f"k must be >= 1, got {k}")
    G = as_generic(H)
    if any(len(e) == 1 for e in G.edges):
        return None  # a single-vertex edge is monochromatic under any coloring
    order = _order_vertices(G)
    n = len(order)
    if n == 0:
        return Coloring({}, k)
    pos = {v: i for i, v in enumerate(order)}
    edges = [tuple(sorted(pos[v] for v in e)) for e in G.edges]
    incident: list[list[int]] = [[] for _ in range(n)]
    for ei, e in enumerate(edges):
        for v in e:
            incident[v].append(ei)

    color = [-1] * n
    banned = [0] * n  # bitmask of barred colors per vertex
    full = (1 << k) - 1
    budget = _Budget(node_limit)

    def propagate(v: int, trail: list[tuple[str, int, int]]) -> bool:
        """Assign pending unit-forced vertices starting from v's assignment."""
        queue = [v]
        while queue:
            u = queue.pop()
            for ei in incident[u]:
                e = edges[ei]
                unassigned = [w for w in e if color[w] == -1]
                if len(unassigned) > 1:
                    continue
                cols = {color[w] for w in e if color[w] != -1}
                if not unassigned:
                    if len(cols) == 1:
                        return False  # monochromatic edge
                    continue
                if len(cols) != 1:
                    continue
                (w,) = unassigned
                c = cols.pop()
                if not (banned[w] >> c) & 1:
                    banned[w] |= 1 << c
                    trail.append(("ban", w, c))
                    avail = full & ~banned[w]
                    if avail == 0:
                        return False
                    if avail & (avail - 1) == 0:  # single color left: forced assignment
                        fc = avail.bit_length() - 1
                        color[w] = fc
                        trail.append(("set", w, fc))
                        queue.append(w)
        return True

    def undo(trail: list[tuple[str, int, int]]) -> None:
        for op, w, c in reversed(trail):
            if op == "set":
                color[w] = -1
            else:
                banned[w] &= ~(1 << c)

    def next_vertex() -> int:
        for i in range(n):
            if color[i] == -1:
                return i
        return -1

    def solve(depth: int) -> bool:
        budget.tick()
        v = next_vertex()
        if v == -1:
            return True
        limit = 1 if depth == 0 else k
        for c in range(limit):
            if (banned[v] >> c) & 1:
                continue
            color[v] = c
            trail: list[tuple[str, int, int]] = [("set", v, c)]
            if propagate(v, trail) and solve(depth + 1):
                return True
            undo(trail)
        return False

    if solve(0):
        assignment = {order[i]: color[i] for i in range(n)}
        result = Coloring(assignment, k)
        assert is_proper(G, result)
        return result
    return None


def chromatic_number(H: Hypergraph, node_limit: int | None = None) -> tuple[int, Coloring]:
    """Least k admitting a proper coloring, with a witness.

    An edgeless hypergraph has chromatic number 1; a size-1 edge is uncolorable.
    """
    G = as_generic(H)
    if any(len(e) == 1 for e in G.edges):
        raise ValidationError("an edge of size 1 cannot be non-monochromatic")
    k = 1 if not G.edges else 2
    while True:
        c = k_colorable(G, k, node_limit=node_limit)
        if c is not None:
            return k, c
        k += 1


def is_proper(H: Hypergraph, coloring: Coloring) -> bool:
    """Check a coloring: total on the vertex set and no monochromatic edge."""
    G = as_generic(H)
    missing = [v for v in G.vertices if v not in coloring.assignment]
    if missing:
        raise ValidationError(f"partial assignment: no color for {missing[:3]}")
    for e in G.edges:
        if len({coloring.assignment[v] for v in e}) == 1:
            return False
    return True
