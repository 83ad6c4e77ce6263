"""Exact-arithmetic toolkit for lattice line-segment hypergraphs."""

from .geometry import (
    Direction,
    GeometryError,
    LatticePoint,
    LatticeSegment,
    Meet,
    MeetKind,
    QuadConfig,
    QuadConfigError,
    bratio_solve,
    meet,
    primitive,
    project_mod_k,
    quad_config,
    same_line,
    segment,
    segment_from_points,
    segment_points,
    triangle_area2,
)
from .hypergraph import (
    GenericHypergraph,
    SegmentHypergraph,
    ValidationError,
    ZkHypergraph,
    build,
    contains_triangle,
    degree,
    is_intersecting,
    isolated_vertices,
    max_degree,
    zk_hypergraph,
)
from .lp import (
    ChainReport,
    FractionalSolution,
    chain_report,
    fractional_cover,
    fractional_matching,
    verify_slackness,
)
from .solvers import (
    Coloring,
    Cover,
    Matching,
    NodeLimitExceeded,
    chromatic_number,
    covering_number,
    is_proper,
    k_colorable,
    matching_number,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
