"""Deterministic SVG diagrams: lattice dots, segment edges, witness overlays.

Pure function of the spec; identical input yields identical bytes, so diagrams
are safe for golden-file comparison.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import LatticePoint, QuadConfig
from .hypergraph import SegmentHypergraph, ValidationError
from .solvers import Coloring

SCALE = 24
MARGIN = 36
PALETTE = ("#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b")

_STYLE = """\
  .lattice { fill: #d0d0d0; }
  .edge { stroke: #333333; stroke-width: 2; }
  .edge.matched { stroke: #2ca02c; stroke-width: 5; opacity: 0.85; }
  .vertex { fill: #333333; }
  .vertex.cover { fill: #d62728; stroke: #7f0000; stroke-width: 2; }
  .quad { fill: none; stroke: #9467bd; stroke-width: 3; stroke-dasharray: 6 4; }
  .label { font: 14px sans-serif; fill: #444444; }
"""


@dataclass(frozen=True)
class DiagramSpec:
    instance: SegmentHypergraph
    cover: frozenset | None = None
    matching: frozenset | None = None
    coloring: Coloring | None = None
    quad: QuadConfig | None = None


def _validate(spec: DiagramSpec) -> None:
    H = spec.instance
    if spec.cover is not None:
        for v in spec.cover:
            p = v if isinstance(v, LatticePoint) else LatticePoint(*v)
            if p not in H.vertex_index:
                raise ValidationError(f"cover overlay references unknown vertex {v}")
    if spec.matching is not None:
        for i in spec.matching:
            if not (0 <= i < len(H.edges)):
                raise ValidationError(f"matching overlay references unknown edge {i}")
    if spec.coloring is not None:
        for p in H.vertex_index:
            key = p if p in spec.coloring.assignment else p.as_tuple()
            if key not in spec.coloring.assignment:
                raise ValidationError(f"coloring overlay misses vertex {p}")


def render_svg(spec: DiagramSpec) -> str:
    """Render the instance with overlays to standalone SVG 1.1 text."""
    _validate(spec)
    H = spec.instance
    pts = sorted(H.vertex_index)
    out = []
    if not pts:
        return (
            '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            'viewBox="0 0 96 96" width="96" height="96"></svg>\n'
        )
    minx = min(p.x for p in pts)
    maxx = max(p.x for p in pts)
    miny = min(p.y for p in pts)
    maxy = max(p.y for p in pts)
    width = (maxx - minx) * SCALE + 2 * MARGIN
    height = (maxy - miny) * SCALE + 2 * MARGIN

    def X(x: int) -> int:
        return (x - minx) * SCALE + MARGIN

    def Y(y: int) -> int:
        return (maxy - y) * SCALE + MARGIN

    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="0 0 {width} {height}" width="{width}" height="{height}">'
    )
    out.append(f"<style>\n{_STYLE}</style>")
    out.append('<rect width="100%" height="100%" fill="#ffffff"/>')

    for gx in range(minx, maxx + 1):
        for gy in range(miny, maxy + 1):
            out.append(f'<circle class="lattice" cx="{X(gx)}" cy="{Y(gy)}" r="2"/>')

    matched = spec.matching or frozenset()
    for i, s in enumerate(H.edges):
        a, b = s.base, s.end
        cls = "edge matched" if i in matched else "edge"
        out.append(
            f'<line class="{cls}" x1="{X(a.x)}" y1="{Y(a.y)}" x2="{X(b.x)}" y2="{Y(b.y)}"/>'
        )

    if spec.quad is not None:
        qp = " ".join(f"{X(p.x)},{Y(p.y)}" for p in spec.quad.quad_vertices)
        out.append(f'<polygon class="quad" points="{qp}"/>')
        b = spec.quad.ratios
        for apex, pair in zip(spec.quad.apexes, ((b[0], b[2]), (b[1], b[3]))):
            out.append(
                f'<text class="label" x="{X(apex.x) + 6}" y="{Y(apex.y) - 6}">'
                f"b: {pair[0]}, {pair[1]}</text>"
            )

    cover = {
        (v if isinstance(v, LatticePoint) else LatticePoint(*v)) for v in (spec.cover or ())
    }
    for p in pts:
        if spec.coloring is not None:
            key = p if p in spec.coloring.assignment else p.as_tuple()
            color = PALETTE[spec.coloring.assignment[key] % len(PALETTE)]
            extra = f' fill="{color}"'
            cls = "vertex colored"
        else:
            extra = ""
            cls = "vertex"
        if p in cover:
            cls += " cover"
            extra = ""
        r = 7 if p in cover else 5
        out.append(f'<circle class="{cls}" cx="{X(p.x)}" cy="{Y(p.y)}" r="{r}"{extra}/>')

    out.append("</svg>")
    return "\n".join(out) + "\n"
