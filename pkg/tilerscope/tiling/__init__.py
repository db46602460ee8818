from tilerscope.tiling.metrics import (
    PolygonMetrics,
    count_angles,
    has_parallel_edge_pair,
    planar_points,
    polygon_metrics,
)
from tilerscope.tiling.classifier import (
    TWO_PI_THIRDS,
    HexagonClass,
    ReinhardtClass,
    TilerReason,
    TilerVerdict,
    VerdictKind,
    classify_hexagon,
    has_equal_opposite_edges,
    reinhardt_matches,
    tiler_verdict,
)
