"""Ratio-tuple enumeration, instance generators, and exhaustive intersecting-family search.

Generators are deterministic per seed; enumeration output is canonically sorted
and independent of scheduling.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .geometry import (
    LatticeSegment,
    bratio_solve,
    ratio_relations_hold,
    segment,
    segment_from_points,
    same_line,
)
from .hypergraph import SegmentHypergraph, ValidationError, build


@dataclass(frozen=True, order=True)
class RatioTuple:
    b1: Fraction
    b2: Fraction
    b3: Fraction
    b4: Fraction

    def __post_init__(self) -> None:
        if not ratio_relations_hold((self.b1, self.b2, self.b3, self.b4)):
            raise ValidationError(f"ratio relations violated by {self}")

    def swapped(self) -> "RatioTuple":
        return RatioTuple(self.b2, self.b1, self.b4, self.b3)

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.b1, self.b2, self.b3, self.b4)


def allowed_ratios(r: int) -> frozenset[Fraction]:
    """Extension/side ratios realizable within one r-point edge: {j/i : i+j <= r-1}."""
    if r < 4:
        raise ValidationError(f"ratio analysis needs r >= 4, got {r}")
    return frozenset(
        Fraction(j, i) for i in range(1, r) for j in range(1, r) if i + j <= r - 1
    )


def _step_assignment_exists(b: Fraction, r: int) -> bool:
    # smallest side length making a*b integral is the denominator of b
    a = b.denominator
    return a * (1 + b) <= r - 1


def enumerate_ratio_tuples(r: int) -> list[RatioTuple]:
    """Canonical orbit representatives of the feasible ratio tuples for uniformity r.

    Feasible: (b1,b2) allowed, solved (b3,b4) allowed, and each ratio admits an
    integral side/extension assignment fitting in an r-point edge.  Orbits are
    taken under the swap (b1,b2,b3,b4) -> (b2,b1,b4,b3); representatives are the
    lexicographic minima, returned sorted.
    """
    S = allowed_ratios(r)
    reps = set()
    for b1, b2 in itertools.product(sorted(S), repeat=2):
        b3, b4 = bratio_solve(b1, b2)
        if b3 not in S or b4 not in S:
            continue
        if not all(_step_assignment_exists(b, r) for b in (b1, b2, b3, b4)):
            continue
        t = RatioTuple(b1, b2, b3, b4)
        reps.add(min(t, t.swapped()))
    return sorted(reps)


def raw_ratio_tuples(r: int) -> list[RatioTuple]:
    """All feasible ordered tuples before the swap-symmetry reduction."""
    S = allowed_ratios(r)
    out = []
    for b1, b2 in itertools.product(sorted(S), repeat=2):
        b3, b4 = bratio_solve(b1, b2)
        if b3 in S and b4 in S and all(_step_assignment_exists(b, r) for b in (b1, b2, b3, b4)):
            out.append(RatioTuple(b1, b2, b3, b4))
    return out


# --- segment pools and intersection structure --------------------------------


@lru_cache(maxsize=32)
def segment_pool(r: int, box: int) -> tuple[LatticeSegment, ...]:
    """All canonical r-point segments contained in [-box, box]^2, sorted."""
    if box < 1:
        raise ValidationError("box must be >= 1")
    span = r - 1
    segs = []
    for dx in range(0, 2 * box // span + 1):
        for dy in range(-(2 * box // span), 2 * box // span + 1):
            if dx == 0 and dy <= 0:
                continue
            if gcd(abs(dx), abs(dy)) != 1:
                continue
            for x in range(-box, box - span * dx + 1):
                ylo = -box - min(0, span * dy)
                yhi = box - max(0, span * dy)
                for y in range(ylo, yhi + 1):
                    segs.append(segment((x, y), (dx, dy), r))
    return tuple(sorted(set(segs)))


@lru_cache(maxsize=32)
def intersection_adjacency(pool: tuple[LatticeSegment, ...]) -> tuple[frozenset[int], ...]:
    """adj[i] = indices of pool segments sharing a lattice point with i on a different line."""
    from .geometry import segment_points

    point_map: dict = {}
    for i, s in enumerate(pool):
        for p in segment_points(s):
            point_map.setdefault(p, []).append(i)
    adj: list[set[int]] = [set() for _ in pool]
    for ids in point_map.values():
        for i, j in itertools.combinations(ids, 2):
            if not same_line(pool[i], pool[j]):
                adj[i].add(j)
                adj[j].add(i)
    return tuple(frozenset(a) for a in adj)


# --- generators ---------------------------------------------------------------


def generate_random(r: int, edge_target: int, box: int, seed: int) -> SegmentHypergraph:
    """Rejection-sample distinct-line segments in the box; deterministic per seed.

    If the budget runs out before reaching the target the shorter instance is
    returned; callers detect this by its edge count.
    """
    if r < 2:
        raise ValidationError("r must be >= 2")
    if box < (r - 1 + 1) // 2:
        raise ValidationError(f"box {box} too small for r={r}")
    rng = random.Random(seed)
    pool = segment_pool(r, box)
    chosen: list[LatticeSegment] = []
    keys = set()
    budget = 200 + 100 * edge_target
    while len(chosen) < edge_target and budget > 0:
        budget -= 1
        s = pool[rng.randrange(len(pool))]
        k = s.line_key()
        if k in keys:
            continue
        keys.add(k)
        chosen.append(s)
    return build(r, chosen)


def generate_intersecting(r: int, edge_target: int, box: int, seed: int) -> SegmentHypergraph:
    """Backtracking growth of a pairwise-intersecting family; deterministic per seed."""
    if r < 3:
        raise ValidationError("intersecting generator needs r >= 3")
    rng = random.Random(seed)
    pool = segment_pool(r, box)
    adj = intersection_adjacency(pool)
    n = len(pool)
    best: list[int] = []
    nodes = 0
    node_budget = 4000 + 400 * edge_target

    def grow(cliq: list[int], cand: list[int]) -> list[int] | None:
        nonlocal best, nodes
        nodes += 1
        if len(cliq) > len(best):
            best = list(cliq)
        if len(cliq) == edge_target:
            return cliq
        if nodes > node_budget:
            return None
        order = list(cand)
        rng.shuffle(order)
        for j in order:
            nxt = [x for x in cand if x != j and x in adj[j]]
            got = grow(cliq + [j], nxt)
            if got is not None:
                return got
        return None

    start_order = list(range(n))
    rng.shuffle(start_order)
    for i in start_order:
        got = grow([i], sorted(adj[i]))
        if got is not None:
            return build(r, [pool[j] for j in got])
        if nodes > node_budget:
            break
    return build(r, [pool[j] for j in best])


# --- canonical forms and exhaustive enumeration -------------------------------

_POINT_GROUP = (
    lambda x, y: (x, y),
    lambda x, y: (-y, x),
    lambda x, y: (-x, -y),
    lambda x, y: (y, -x),
    lambda x, y: (x, -y),
    lambda x, y: (-x, y),
    lambda x, y: (y, x),
    lambda x, y: (-y, -x),
)


def _seg_key(s: LatticeSegment) -> tuple[int, int, int, int, int]:
    return (s.base.x, s.base.y, s.dir.dx, s.dir.dy, s.count)


def canonical_form(H: SegmentHypergraph) -> tuple[tuple, SegmentHypergraph]:
    """Least representative of H under the 8 lattice point-group maps and translation."""
    best_key = None
    best_segs = None
    for g in _POINT_GROUP:
        segs = []
        allpts = []
        for s in H.edges:
            pts = [g(p.x, p.y) for p in (s.point_at(t) for t in range(s.count))]
            segs.append(pts)
            allpts.extend(pts)
        minx = min(p[0] for p in allpts)
        miny = min(p[1] for p in allpts)
        canon = sorted(
            segment_from_points([(x - minx, y - miny) for x, y in pts]) for pts in segs
        )
        key = tuple(_seg_key(s) for s in canon)
        if best_key is None or key < best_key:
            best_key = key
            best_segs = canon
    assert best_segs is not None
    return (H.r,) + best_key, build(H.r, best_segs)


def quad_ratio_feasible(H: SegmentHypergraph) -> bool:
    """Every 4-edge quadrilateral sub-configuration must carry a feasible ratio tuple."""
    from .geometry import QuadConfigError, quad_config

    if H.r < 4:
        return True
    feasible = {t.as_tuple() for t in enumerate_ratio_tuples(H.r)}
    feasible |= {t.swapped().as_tuple() for t in enumerate_ratio_tuples(H.r)}
    for quad in itertools.combinations(H.edges, 4):
        try:
            qc = quad_config(*quad)
        except QuadConfigError:
            continue
        if qc.ratios not in feasible:
            return False
    return True


def enumerate_intersecting(r: int, box: int):
    """Maximal pairwise-intersecting families in the box, one per lattice-symmetry class.

    Yields canonical representatives in sorted order.  Families whose
    quadrilateral sub-configurations carry infeasible ratio tuples are pruned
    (for valid lattice configurations this never fires; it is a consistency
    gate, not a heuristic).
    """
    pool = segment_pool(r, box)
    adj = intersection_adjacency(pool)
    n = len(pool)
    cliques: list[list[int]] = []

    def bron_kerbosch(R: list[int], P: set[int], X: set[int]) -> None:
        if not P and not X:
            cliques.append(list(R))
            return
        pivot = max(sorted(P | X), key=lambda v: len(adj[v] & P))
        for v in sorted(P - adj[pivot]):
            bron_kerbosch(R + [v], P & adj[v], X & adj[v])
            P.remove(v)
            X.add(v)

    bron_kerbosch([], set(range(n)), set())
    seen = {}
    for cl in cliques:
        H = build(r, [pool[i] for i in cl])
        if not quad_ratio_feasible(H):
            continue
        key, canon = canonical_form(H)
        if key not in seen:
            seen[key] = canon
    for key in sorted(seen):
        yield seen[key]
