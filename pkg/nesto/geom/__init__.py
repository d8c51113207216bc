from .stellar import cross_polytope, stellar_subdivide, subdivision_order, stellar_realization, stellar_matches_nested
from .coords import (
    VertexCoordinates,
    incidence,
    extended_vertex_coords,
    nestohedron_vertex_coords,
    coordinate_table,
    coordinate_matrix,
    write_csv,
)
from .orientation import (
    CostOrientation,
    default_cost,
    cost_orientation,
    matches_flip_poset,
    axis_step,
    geom_report,
    complete_geom_report,
)

__all__ = [
    'cross_polytope', 'stellar_subdivide', 'subdivision_order', 'stellar_realization', 'stellar_matches_nested',
    'VertexCoordinates', 'incidence', 'extended_vertex_coords', 'nestohedron_vertex_coords',
    'coordinate_table', 'coordinate_matrix', 'write_csv',
    'CostOrientation', 'default_cost', 'cost_orientation', 'matches_flip_poset', 'axis_step',
    'geom_report', 'complete_geom_report',
]
