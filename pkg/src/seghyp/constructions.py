"""Builders for every named configuration, each validated on construction.

Figure-only configurations are re-derived by bounded search using their stated
properties as the acceptance predicate, never transcribed by eye.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .geometry import (
    GeometryError,
    LatticePoint,
    cross,
    primitive,
    segment,
    segment_from_points,
)
from .hypergraph import (
    GenericHypergraph,
    SegmentHypergraph,
    ZkHypergraph,
    build,
    contains_triangle,
    is_intersecting,
    isolated_vertices,
    zk_hypergraph,
)
from .solvers import Coloring, ValidationError, covering_number, is_proper, k_colorable, matching_number


def k4_example() -> SegmentHypergraph:
    """Complete graph on 4 lattice points as a 2-segment hypergraph (chromatic number 4)."""
    pts = [(0, 0), (1, 1), (1, 2), (2, 1)]
    segs = [segment_from_points([p, q]) for p, q in itertools.combinations(pts, 2)]
    return build(2, segs)


def triangle_R() -> SegmentHypergraph:
    """Complete 2-segment hypergraph on three points: nu=1 but tau=2."""
    pts = [(0, 0), (1, 0), (0, 1)]
    segs = [segment_from_points([p, q]) for p, q in itertools.combinations(pts, 2)]
    return build(2, segs)


NONFANO_POINTS = ((-2, 0), (0, 0), (2, 0), (0, 2), (-1, 3), (1, 3), (0, 6))


def nonfano_S() -> GenericHypergraph:
    """Seven points whose maximal collinear triples form an intersecting family with tau=3.

    Not a segment hypergraph: the collinear triples are not consecutive lattice
    points.  Edges are computed by a collinearity scan, not hard-coded.
    """
    pts = [LatticePoint(*p) for p in NONFANO_POINTS]
    triples = set()
    for a, b, c in itertools.combinations(pts, 3):
        if cross((b - a).as_tuple(), (c - a).as_tuple()) == 0:
            triples.add(frozenset((a.as_tuple(), b.as_tuple(), c.as_tuple())))
    # keep maximal collinear sets only (no 4 of the 7 points are collinear; scan confirms)
    maximal = [t for t in triples if not any(t < u for u in triples)]
    return GenericHypergraph.make([p.as_tuple() for p in pts], maximal)


def grid_face() -> SegmentHypergraph:
    """The 3x3 grid layer: 3 rows, 3 columns and 2 main diagonals (8 edges, no isolated vertices)."""
    segs = []
    for i in range(3):
        segs.append(segment((0, i), (1, 0), 3))
        segs.append(segment((i, 0), (0, 1), 3))
    segs.append(segment((0, 0), (1, 1), 3))
    segs.append(segment((0, 2), (1, -1), 3))
    return build(3, segs)


def cube_C() -> GenericHypergraph:
    """The 40-edge hypergraph on {0,1,2}^3 that is not 2-colorable.

    Per layer z: the 8 grid-face edges.  Plus 8 vertical edges through the
    boundary positions of the grid, and 2 diagonals on each of the 4 vertical
    sides.
    """
    edges = []
    for z in range(3):
        for i in range(3):
            edges.append([(x, i, z) for x in range(3)])
            edges.append([(i, y, z) for y in range(3)])
        edges.append([(t, t, z) for t in range(3)])
        edges.append([(t, 2 - t, z) for t in range(3)])
    for x, y in itertools.product(range(3), repeat=2):
        if (x, y) != (1, 1):
            edges.append([(x, y, z) for z in range(3)])
    for x in (0, 2):
        edges.append([(x, t, t) for t in range(3)])
        edges.append([(x, t, 2 - t) for t in range(3)])
    for y in (0, 2):
        edges.append([(t, y, t) for t in range(3)])
        edges.append([(t, y, 2 - t) for t in range(3)])
    verts = list(itertools.product(range(3), repeat=3))
    return GenericHypergraph.make(verts, edges)


def _project3(p: tuple[int, int, int]) -> tuple[int, int]:
    x, y, z = p
    return (x + 17 * z, y + 29 * z)


def cube_projected() -> SegmentHypergraph:
    """Planar image of the cube hypergraph under (x,y,z) -> (x+17z, y+29z).

    Every image edge must be 3 consecutive lattice points on its own line; any
    failure here would falsify the construction, so validation errors propagate.
    """
    C = cube_C()
    segs = [segment_from_points([_project3(p) for p in e]) for e in C.edges]
    return build(3, segs)


def lowerbound_family(r: int) -> SegmentHypergraph:
    """Intersecting r-segment hypergraph with covering number ceil(r/2).

    Two rails from the origin along (1, r-1) and (-1, r-1) plus r-2 rungs
    connecting them; any two edges meet at a lattice point and no three are
    concurrent.
    """
    if r < 5:
        raise ValidationError(f"family is defined for r >= 5, got {r}")
    v = (1, r - 1)
    u = (-1, r - 1)
    segs = [segment((0, 0), v, r), segment((0, 0), u, r)]
    for i in range(1, r - 1):
        start = (i * v[0], i * v[1])
        end = ((r - 1 - i) * u[0], (r - 1 - i) * u[1])
        # both endpoints are lattice meets r-1 primitive steps apart
        step = ((end[0] - start[0]) // (r - 1), (end[1] - start[1]) // (r - 1))
        segs.append(segment(start, step, r))
    H = build(r, segs)
    if not is_intersecting(H):
        raise ValidationError("family construction failed to be intersecting")
    return H


@lru_cache(maxsize=None)
def zk_colorings() -> dict[int, Coloring]:
    """Proper colorings of Z_2, Z_3, Z_4 with 4, 3, 2 colors, recovered by search."""
    targets = {2: 4, 3: 3, 4: 2}
    out = {}
    for k, colors in targets.items():
        zk = zk_hypergraph(k)
        c = k_colorable(zk.to_generic(), colors)
        if c is None:
            raise ValidationError(f"no {colors}-coloring of Z_{k} found; this should be impossible")
        out[k] = c
    return out


def color_via_projection(H: SegmentHypergraph, k: int) -> Coloring:
    """Pull a stored Z_k coloring back along reduction mod k (needs r >= k).

    Uses 4 colors for k=2, 3 for k=3, 2 for k=4.
    """
    if k not in (2, 3, 4):
        raise ValidationError(f"projection coloring supports k in {{2,3,4}}, got {k}")
    if H.r < k:
        raise ValidationError(f"projection mod {k} needs r >= {k}, got r={H.r}")
    zc = zk_colorings()[k]
    assignment = {
        p.as_tuple(): zc.assignment[(p.x % k, p.y % k)] for p in H.vertex_index
    }
    return Coloring(assignment, zc.num_colors)


# --- derived searches -------------------------------------------------------

# Incidence template for the r=4 search: the 3-uniform projective plane minus
# one line.  Point 1 lies on lines 0,1,2; point 2 on lines 0,3,4; line 5 is
# {3,4,7}.  Any two lines share exactly one point.
_FANO_MINUS = ((1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7))


def _canonical_directions(dmax: int) -> list[tuple[int, int]]:
    dirs = []
    for dx in range(dmax + 1):
        for dy in range(-dmax, dmax + 1):
            try:
                d = primitive((dx, dy))
            except GeometryError:
                continue
            if (d.dx, d.dy) == (dx, dy):
                dirs.append((dx, dy))
    return sorted(dirs)


def _line_meet(p: tuple[int, int], dp: tuple[int, int], q: tuple[int, int], dq: tuple[int, int]):
    """Integer step parameters (on each line) of the crossing, or None."""
    den = cross(dp, dq)
    if den == 0:
        return None
    w = (q[0] - p[0], q[1] - p[1])
    tn = cross(w, dq)
    un = cross(w, dp)
    if tn % den or un % den:
        return None
    return tn // den, un // den


def _extend_to_four(params: list[int]) -> list[tuple[int, int]]:
    """Ways to embed 3 step-positions into 4 consecutive ones: (start, free slot)."""
    lo, hi = min(params), max(params)
    if hi - lo > 3:
        return []
    out = []
    for start in range(hi - 3, lo + 1):
        window = set(range(start, start + 4))
        free = window - set(params)
        if len(free) == 1:
            out.append((start, free.pop()))
    return out


def _fit_box(H: SegmentHypergraph, box: int) -> SegmentHypergraph | None:
    """Recenter the instance; None if it cannot fit in [-box, box]^2."""
    pts = [p for p in H.vertex_index]
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    w, h = max(xs) - min(xs), max(ys) - min(ys)
    if w > 2 * box or h > 2 * box:
        return None
    sx = -(min(xs) + w // 2)
    sy = -(min(ys) + h // 2)
    moved = [
        segment((s.base.x + sx, s.base.y + sy), (s.dir.dx, s.dir.dy), s.count)
        for s in H.edges
    ]
    return build(H.r, moved)


def _r4_candidate(lines: list[tuple[tuple[int, int], tuple[int, int], list[int]]], box: int) -> SegmentHypergraph | None:
    """Try to extend six 3-point core lines to a valid 4-segment instance."""
    choices = [_extend_to_four(params) for _, _, params in lines]
    if any(not c for c in choices):
        return None
    for combo in itertools.product(*choices):
        segs = []
        for (anchor, d, _params), (start, _free) in zip(lines, combo):
            base = (anchor[0] + start * d[0], anchor[1] + start * d[1])
            segs.append(segment(base, d, 4))
        try:
            H = build(4, segs)
        except ValidationError:
            continue
        if not is_intersecting(H):
            continue
        iso = isolated_vertices(H)
        if any(not (set(H.edge_points(i)) & iso) for i in range(len(H.edges))):
            continue
        fitted = _fit_box(H, box)
        if fitted is None:
            continue
        tau, _ = covering_number(fitted)
        nu, _ = matching_number(fitted)
        if tau == 3 and nu == 1:
            return fitted
    return None


def search_r4_example(box: int = 6) -> SegmentHypergraph | None:
    """Intersecting 4-segment hypergraph with 6 edges, tau=3, and an isolated vertex per edge.

    Re-derives a lattice realization of the 3-uniform projective plane minus one
    line (plus one isolated point per edge) by enumerating line directions and
    integer incidences; returns the first instance found in a deterministic scan,
    or None when the box is too small.
    """
    if box < 1:
        raise ValidationError("box must be >= 1")
    dmax = max(2, min(3, (2 * box) // 3))
    dirs = _canonical_directions(dmax)
    p1 = (0, 0)
    positions = [
        (t2, t3)
        for t2 in range(-3, 4)
        for t3 in range(-3, 4)
        if t2 and t3 and t2 != t3 and max(0, t2, t3) - min(0, t2, t3) <= 3
    ]
    for d1 in dirs:
        for t2, t3 in positions:
            p2 = (t2 * d1[0], t2 * d1[1])
            p3 = (t3 * d1[0], t3 * d1[1])
            for d2 in dirs:
                if d2 == d1:
                    continue
                for d4 in dirs:
                    if d4 in (d1, d2):
                        continue
                    m = _line_meet(p1, d2, p2, d4)
                    if m is None:
                        continue
                    a4, b4 = m
                    if not (0 < abs(a4) <= 3 and abs(b4) <= 3) or b4 == 0:
                        continue
                    p4 = (p1[0] + a4 * d2[0], p1[1] + a4 * d2[1])
                    for d3 in dirs:
                        if d3 in (d1, d2):
                            continue
                        m = _line_meet(p1, d3, p2, d4)
                        if m is None:
                            continue
                        g6, b6 = m
                        if not (0 < abs(g6) <= 3 and b6 != 0 and max(b4, b6, 0) - min(b4, b6, 0) <= 3):
                            continue
                        if b6 == b4:
                            continue
                        p6 = (p1[0] + g6 * d3[0], p1[1] + g6 * d3[1])
                        for d5 in dirs:
                            if d5 in (d1, d2, d4):
                                continue
                            m = _line_meet(p1, d2, p2, d5)
                            if m is None:
                                continue
                            e5, z5 = m
                            if e5 in (0, a4) or z5 == 0 or max(0, a4, e5) - min(0, a4, e5) > 3:
                                continue
                            p5 = (p1[0] + e5 * d2[0], p1[1] + e5 * d2[1])
                            m = _line_meet(p1, d3, p2, d5)
                            if m is None:
                                continue
                            h7, t7 = m
                            if h7 in (0, g6) or t7 in (0, z5):
                                continue
                            if max(0, g6, h7) - min(0, g6, h7) > 3:
                                continue
                            if max(0, z5, t7) - min(0, z5, t7) > 3:
                                continue
                            p7 = (p1[0] + h7 * d3[0], p1[1] + h7 * d3[1])
                            pts = [p1, p2, p3, p4, p5, p6, p7]
                            if len(set(pts)) != 7:
                                continue
                            # line 6 = {p3, p4, p7} must be a lattice line with a tight window
                            v34 = (p4[0] - p3[0], p4[1] - p3[1])
                            v37 = (p7[0] - p3[0], p7[1] - p3[1])
                            if v34 == (0, 0) or v37 == (0, 0) or cross(v34, v37) != 0:
                                continue
                            d6 = primitive(v34)
                            step = (d6.dx, d6.dy)
                            t4 = v34[0] // step[0] if step[0] else v34[1] // step[1]
                            t7b = v37[0] // step[0] if step[0] else v37[1] // step[1]
                            if max(0, t4, t7b) - min(0, t4, t7b) > 3:
                                continue
                            lines = [
                                (p1, d1, [0, t2, t3]),
                                (p1, d2, [0, a4, e5]),
                                (p1, d3, [0, g6, h7]),
                                (p2, d4, [0, b4, b6]),
                                (p2, d5, [0, z5, t7]),
                                (p3, step, [0, t4, t7b]),
                            ]
                            H = _r4_candidate(lines, box)
                            if H is not None:
                                return H
    return None


def search_six_edge_r5(box: int = 5) -> SegmentHypergraph | None:
    """Intersecting 5-segment hypergraph with 6 edges containing a triangle.

    Exhaustive ascending-order clique extension over all 5-point segments in the
    box (edges must pairwise share a lattice vertex); first hit wins, or None if
    the box has no such configuration.
    """
    from .search import segment_pool, intersection_adjacency

    if box < 1:
        raise ValidationError("box must be >= 1")
    pool = segment_pool(5, box)
    adj = intersection_adjacency(pool)
    n = len(pool)

    def extend(cliq: list[int], cand: set[int]) -> SegmentHypergraph | None:
        if len(cliq) == 6:
            H = build(5, [pool[i] for i in cliq])
            if contains_triangle(H):
                return H
            return None
        if len(cliq) + len(cand) < 6:
            return None
        for j in sorted(cand):
            found = extend(cliq + [j], {x for x in cand if x > j and x in adj[j]})
            if found is not None:
                return found
        return None

    for i in range(n):
        found = extend([i], {x for x in adj[i] if x > i})
        if found is not None:
            return found
    return None
