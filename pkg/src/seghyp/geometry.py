"""Exact integer/rational predicates and constructions on the integer lattice.

All arithmetic is integer or `fractions.Fraction`; no floats anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd


class GeometryError(ValueError):
    """Degenerate or inconsistent geometric input."""


class QuadConfigError(GeometryError):
    """Four segments do not form a valid quadrilateral configuration."""


@dataclass(frozen=True, order=True)
class LatticePoint:
    x: int
    y: int

    def __add__(self, other: "LatticePoint") -> "LatticePoint":
        return LatticePoint(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "LatticePoint") -> "LatticePoint":
        return LatticePoint(self.x - other.x, self.y - other.y)

    def as_tuple(self) -> tuple[int, int]:
        return (self.x, self.y)


@dataclass(frozen=True, order=True)
class Direction:
    """Primitive, sign-canonical step vector: gcd(|dx|,|dy|)=1 and dx>0, or dx=0 and dy>0."""

    dx: int
    dy: int

    def __post_init__(self) -> None:
        if self.dx == 0 and self.dy == 0:
            raise GeometryError("zero vector is not a direction")
        if gcd(abs(self.dx), abs(self.dy)) != 1:
            raise GeometryError(f"direction ({self.dx},{self.dy}) is not primitive")
        if self.dx < 0 or (self.dx == 0 and self.dy < 0):
            raise GeometryError(f"direction ({self.dx},{self.dy}) is not sign-canonical")

    def step(self, p: LatticePoint, t: int) -> LatticePoint:
        return LatticePoint(p.x + t * self.dx, p.y + t * self.dy)


def primitive(v: tuple[int, int]) -> Direction:
    """Reduce an integer vector to its canonical primitive direction.

    Parallel inputs map to the same Direction; the zero vector is rejected.
    """
    vx, vy = v
    if vx == 0 and vy == 0:
        raise GeometryError("cannot take the direction of the zero vector (degenerate segment)")
    g = gcd(abs(vx), abs(vy))
    vx, vy = vx // g, vy // g
    if vx < 0 or (vx == 0 and vy < 0):
        vx, vy = -vx, -vy
    return Direction(vx, vy)


def cross(a: tuple[int, int], b: tuple[int, int]) -> int:
    return a[0] * b[1] - a[1] * b[0]


@dataclass(frozen=True, order=True)
class LatticeSegment:
    """`count` consecutive lattice points from `base` along primitive `dir`.

    Stored canonically: `dir` is sign-canonical and `base` is the endpoint from
    which `dir` traverses the segment, so structural equality is geometric
    equality.  Use :func:`segment` / :func:`segment_from_points` to build one.
    """

    base: LatticePoint
    dir: Direction
    count: int

    def __post_init__(self) -> None:
        if self.count < 2:
            raise GeometryError(f"segment needs at least 2 points, got count={self.count}")

    @property
    def end(self) -> LatticePoint:
        return self.dir.step(self.base, self.count - 1)

    def line_key(self) -> tuple[int, int, int]:
        """Identifies the supporting line: equal keys iff equal lines."""
        return (self.dir.dx, self.dir.dy, cross(self.base.as_tuple(), (self.dir.dx, self.dir.dy)))

    def point_at(self, t: int) -> LatticePoint:
        return self.dir.step(self.base, t)

    def param_of(self, p: LatticePoint) -> int:
        """Step index of a point known to lie on the supporting line."""
        d = p - self.base
        if cross(d.as_tuple(), (self.dir.dx, self.dir.dy)) != 0:
            raise GeometryError(f"{p} is not on the line of {self}")
        return d.x // self.dir.dx if self.dir.dx != 0 else d.y // self.dir.dy

    def contains(self, p: LatticePoint) -> bool:
        d = p - self.base
        if cross(d.as_tuple(), (self.dir.dx, self.dir.dy)) != 0:
            return False
        t = d.x // self.dir.dx if self.dir.dx != 0 else d.y // self.dir.dy
        return 0 <= t <= self.count - 1


def segment(base: tuple[int, int], step: tuple[int, int], count: int) -> LatticeSegment:
    """Build a canonical segment from any endpoint and any step vector parallel to it.

    `step` must be primitive (pass the exact lattice step, not a longer parallel
    vector: a non-primitive step would skip lattice points and the stated points
    would not be consecutive).
    """
    sx, sy = step
    if sx == 0 and sy == 0:
        raise GeometryError("zero step vector")
    if gcd(abs(sx), abs(sy)) != 1:
        raise GeometryError(f"step {step} is not primitive; points would not be consecutive")
    if count < 2:
        raise GeometryError(f"segment needs at least 2 points, got count={count}")
    b = LatticePoint(*base)
    if sx < 0 or (sx == 0 and sy < 0):
        b = LatticePoint(b.x + (count - 1) * sx, b.y + (count - 1) * sy)
        sx, sy = -sx, -sy
    return LatticeSegment(b, Direction(sx, sy), count)


def segment_from_points(points: list[LatticePoint] | list[tuple[int, int]]) -> LatticeSegment:
    """Build the segment whose point set is exactly the given collinear consecutive points."""
    pts = sorted(LatticePoint(*p) if isinstance(p, tuple) else p for p in points)
    if len(pts) < 2:
        raise GeometryError("need at least 2 points")
    if len(set(pts)) != len(pts):
        raise GeometryError("duplicate points")
    d = primitive((pts[1] - pts[0]).as_tuple())
    for i, p in enumerate(pts):
        if d.step(pts[0], i) != p:
            raise GeometryError(f"points are not consecutive lattice points on one line: {pts}")
    return LatticeSegment(pts[0], d, len(pts))


def segment_points(s: LatticeSegment) -> list[LatticePoint]:
    """The `count` consecutive lattice points of `s`, in direction order."""
    return [s.point_at(t) for t in range(s.count)]


def same_line(s1: LatticeSegment, s2: LatticeSegment) -> bool:
    """True iff the supporting lines coincide."""
    return s1.line_key() == s2.line_key()


class MeetKind(Enum):
    DISJOINT = "disjoint"
    LATTICE_MEET = "lattice_meet"
    NON_LATTICE_CROSS = "non_lattice_cross"
    PARALLEL = "parallel"
    SAME_LINE = "same_line"


@dataclass(frozen=True)
class Meet:
    kind: MeetKind
    point: LatticePoint | None = None

    @property
    def is_lattice(self) -> bool:
        return self.kind is MeetKind.LATTICE_MEET


def meet(s1: LatticeSegment, s2: LatticeSegment) -> Meet:
    """Exact classification of how two segments relate.

    LATTICE_MEET: the segments share a lattice point (necessarily unique when the
    lines differ).  NON_LATTICE_CROSS: the closed segments cross at a non-lattice
    point.  DISJOINT: the lines cross but at least one segment stops short of the
    crossing.  PARALLEL / SAME_LINE: the lines do not cross.
    """
    d1, d2 = s1.dir, s2.dir
    denom = cross((d1.dx, d1.dy), (d2.dx, d2.dy))
    if denom == 0:
        return Meet(MeetKind.SAME_LINE if same_line(s1, s2) else MeetKind.PARALLEL)
    w = s2.base - s1.base
    # s1.base + t*d1 == s2.base + u*d2 at the unique line crossing
    t = Fraction(cross(w.as_tuple(), (d2.dx, d2.dy)), denom)
    u = Fraction(cross(w.as_tuple(), (d1.dx, d1.dy)), denom)
    on1 = 0 <= t <= s1.count - 1
    on2 = 0 <= u <= s2.count - 1
    if on1 and on2:
        if t.denominator == 1 and u.denominator == 1:
            return Meet(MeetKind.LATTICE_MEET, s1.point_at(int(t)))
        return Meet(MeetKind.NON_LATTICE_CROSS)
    return Meet(MeetKind.DISJOINT)


def triangle_area2(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> int:
    """Twice the signed area (shoelace); zero iff collinear."""
    return cross((b - a).as_tuple(), (c - a).as_tuple())


def project_mod_k(s: LatticeSegment, k: int) -> frozenset[tuple[int, int]]:
    """Image of the segment's point set under coordinatewise reduction mod k.

    For count >= k this is the full coset of the reduced direction and has
    exactly k elements, because the direction is primitive.
    """
    if k < 2:
        raise GeometryError(f"modulus must be >= 2, got {k}")
    if s.count < k:
        raise GeometryError(
            f"projection mod {k} needs count >= {k}, got {s.count} (coloring inapplicable)"
        )
    return frozenset((p.x % k, p.y % k) for p in segment_points(s))


@dataclass(frozen=True)
class QuadConfig:
    """Four pairwise-intersecting segments bounding a quadrilateral and two triangles.

    `segments` are labeled so that consecutive ones meet at the quadrilateral's
    vertices (given in cyclic order) and opposite ones meet at the two apexes.
    `side_steps[i]` counts lattice steps of the quadrilateral side on segment i;
    `ratios[i]` is (extension steps toward the apex) / side_steps[i].  The label
    assignment is the one with lexicographically least ratio tuple among those
    satisfying both ratio relations exactly.
    """

    segments: tuple[LatticeSegment, LatticeSegment, LatticeSegment, LatticeSegment]
    quad_vertices: tuple[LatticePoint, LatticePoint, LatticePoint, LatticePoint]
    apexes: tuple[LatticePoint, LatticePoint]
    side_steps: tuple[int, int, int, int]
    ratios: tuple[Fraction, Fraction, Fraction, Fraction]


def ratio_relations_hold(b: tuple[Fraction, Fraction, Fraction, Fraction]) -> bool:
    """The two exact constraints tying the four extension ratios together."""
    b1, b2, b3, b4 = b
    return b2 * b3 == b1 * (b2 + 1) and b1 * b4 == (b1 + 1) * b2


def bratio_solve(b1: Fraction, b2: Fraction) -> tuple[Fraction, Fraction]:
    """The unique positive (b3, b4) completing (b1, b2) under the ratio relations."""
    b1, b2 = Fraction(b1), Fraction(b2)
    if b1 <= 0 or b2 <= 0:
        raise GeometryError(f"ratios must be positive, got ({b1}, {b2})")
    return b1 * (b2 + 1) / b2, b2 * (b1 + 1) / b1


def _is_convex_cycle(pts: tuple[LatticePoint, ...]) -> bool:
    n = len(pts)
    signs = set()
    for i in range(n):
        a, b, c = pts[i], pts[(i + 1) % n], pts[(i + 2) % n]
        s = triangle_area2(a, b, c)
        if s == 0:
            return False
        signs.add(s > 0)
    return len(signs) == 1


def quad_config(
    s1: LatticeSegment, s2: LatticeSegment, s3: LatticeSegment, s4: LatticeSegment
) -> QuadConfig:
    """Extract the quadrilateral/triangle structure of four pairwise-meeting segments.

    Preconditions: the six pairwise meets are lattice points and pairwise
    distinct (no three segments concurrent).  The opposite-pair structure is
    found by trying all three pairings of the segments into two "diagonal"
    pairs and all labelings within each; a candidate is accepted only when the
    four quadrilateral vertices are in convex position, each apex lies outside
    its segment's quadrilateral side, and both ratio relations hold exactly.
    The lexicographically least ratio tuple among accepted labelings wins.
    """
    segs = (s1, s2, s3, s4)
    meets: dict[tuple[int, int], LatticePoint] = {}
    for i, j in itertools.combinations(range(4), 2):
        m = meet(segs[i], segs[j])
        if not m.is_lattice:
            raise QuadConfigError(
                f"segments {i} and {j} do not meet at a lattice vertex ({m.kind.value})"
            )
        meets[(i, j)] = m.point  # type: ignore[assignment]
    if len(set(meets.values())) != 6:
        by_point: dict[LatticePoint, list[tuple[int, int]]] = {}
        for pair, p in meets.items():
            by_point.setdefault(p, []).append(pair)
        bad = next(pairs for pairs in by_point.values() if len(pairs) > 1)
        concurrent = sorted(set(itertools.chain.from_iterable(bad)))
        raise QuadConfigError(f"three or more segments concurrent: segments {concurrent}")

    def meet_of(i: int, j: int) -> LatticePoint:
        return meets[(min(i, j), max(i, j))]

    param = {(i, j): segs[i].param_of(meet_of(i, j)) for i in range(4) for j in range(4) if i != j}

    best: tuple | None = None
    for pairing in (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))):
        for pair13, pair24 in (pairing, pairing[::-1]):
            for a1, a3 in (pair13, pair13[::-1]):
                for a2, a4 in (pair24, pair24[::-1]):
                    labels = (a1, a2, a3, a4)
                    qv = tuple(
                        meet_of(labels[idx], labels[(idx + 1) % 4]) for idx in range(4)
                    )
                    if not _is_convex_cycle(qv):
                        continue
                    sides = []
                    ratios = []
                    ok = True
                    for idx in range(4):
                        si = labels[idx]
                        opp = labels[(idx + 2) % 4]
                        prev = labels[(idx - 1) % 4]
                        nxt = labels[(idx + 1) % 4]
                        t_apex = param[(si, opp)]
                        t1, t2 = sorted((param[(si, prev)], param[(si, nxt)]))
                        if t1 < t_apex < t2:  # apex inside the side: not this labeling
                            ok = False
                            break
                        side = t2 - t1
                        ext = t1 - t_apex if t_apex < t1 else t_apex - t2
                        if ext <= 0 or side <= 0:
                            ok = False
                            break
                        sides.append(side)
                        ratios.append(Fraction(ext, side))
                    if not ok:
                        continue
                    rt = tuple(ratios)
                    if not ratio_relations_hold(rt):
                        continue
                    key = (rt, tuple(segs[i] for i in labels))
                    if best is None or key < best[0]:
                        best = (key, labels, qv, tuple(sides), rt)
    if best is None:
        raise QuadConfigError(
            "no labeling of the four segments satisfies the ratio relations; "
            "the configuration does not bound a quadrilateral with two triangles"
        )
    _, labels, qv, sides, rt = best
    return QuadConfig(
        segments=tuple(segs[i] for i in labels),
        quad_vertices=qv,
        apexes=(meet_of(labels[0], labels[2]), meet_of(labels[1], labels[3])),
        side_steps=sides,
        ratios=rt,
    )
