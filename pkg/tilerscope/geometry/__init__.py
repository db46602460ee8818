from tilerscope.config import ToleranceConfig
from tilerscope.geometry.primitives import Plane, Point3
from tilerscope.geometry.polyhedron import (
    ConvexPolyhedron,
    orient_facets,
    validate_polyhedron,
    vertex_valence,
)
from tilerscope.geometry.section import (
    EmptySection,
    OnEdge,
    OnVertex,
    SectionPolygon,
    SectionResult,
    Segment,
    SinglePoint,
    cross_section,
    is_proper,
    is_trivial,
    polygon_area,
    proper_nudge,
)
