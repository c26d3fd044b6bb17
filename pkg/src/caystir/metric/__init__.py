from caystir.metric.factorization import (
    factor_two_k_transpositions,
    geodesic_factorization,
    splitting_transpositions,
)
from caystir.metric.graph import GraphSpec, VertexGroup
from caystir.metric.spheres import (
    NOT_A_VERTEX,
    SphereAssignment,
    assign_deficit,
    ball_size,
    diameter,
    distance,
    radius_table,
    sphere_radius,
    sphere_size,
    sphere_sizes,
    type_radius,
)

__all__ = [
    "NOT_A_VERTEX",
    "GraphSpec",
    "SphereAssignment",
    "VertexGroup",
    "assign_deficit",
    "ball_size",
    "diameter",
    "distance",
    "factor_two_k_transpositions",
    "geodesic_factorization",
    "radius_table",
    "sphere_radius",
    "sphere_size",
    "sphere_sizes",
    "splitting_transpositions",
    "type_radius",
]
