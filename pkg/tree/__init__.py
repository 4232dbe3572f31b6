"""chainscope - Rooted Tree Package"""

from .vertices import (
    Vertex, Cylinder, MAX_DEGREE, DEFAULT_POINT_CAP,
    check_degree, check_vertex, check_point_cap,
    format_vertex, parse_vertex, format_cylinder, parse_cylinder,
    level_vertices, vertex_index, vertex_at, descendants,
)
from .boundary import (
    BoundaryPoint, canonical_form, format_point, parse_point,
    prefix, unroll, contains, shift, drop, prepend, constant_point, check_point,
)

__all__ = [
    "Vertex", "Cylinder", "MAX_DEGREE", "DEFAULT_POINT_CAP",
    "check_degree", "check_vertex", "check_point_cap",
    "format_vertex", "parse_vertex", "format_cylinder", "parse_cylinder",
    "level_vertices", "vertex_index", "vertex_at", "descendants",
    "BoundaryPoint", "canonical_form", "format_point", "parse_point",
    "prefix", "unroll", "contains", "shift", "drop", "prepend",
    "constant_point", "check_point",
]
