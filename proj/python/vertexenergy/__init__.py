"""Per-vertex graph energy: spectral, weight and moment routes."""

from ._core import (
    EnergyReport,
    Error,
    Graph,
    catalog_names,
    class_weights,
    eigenvalue_classes,
    generalized_petersen,
    graph_energy,
    lcf_graph,
    matrix_abs,
    named_graph,
    parse_graph6,
    shrikhande_graph,
    spectrum,
    vertex_energies,
    walk_table,
    weight_matrix,
    write_graph6,
)

__all__ = [
    "EnergyReport",
    "Error",
    "Graph",
    "catalog_names",
    "class_weights",
    "eigenvalue_classes",
    "generalized_petersen",
    "graph_energy",
    "lcf_graph",
    "matrix_abs",
    "named_graph",
    "parse_graph6",
    "shrikhande_graph",
    "spectrum",
    "vertex_energies",
    "walk_table",
    "weight_matrix",
    "write_graph6",
]

__version__ = "0.1.0"
