"""Exact first and second Zagreb index comparisons for simple graphs."""

from .graph import (
    Graph,
    GraphError,
    Regularity,
    RegularityClass,
    build_graph,
    classify_regularity,
    degree_set,
    edge_class_counts,
    is_connected,
)
from .invariants import DegenerateGraphError, Verdict, ZagrebReport, compare, decomposition_sum, f, m1, m2
from .intervals import (
    IntervalSpec,
    StructureCase,
    classify_equality_structure,
    find_harmonic_collisions,
    find_product_collisions,
    is_good_interval,
    scan_f_sign,
)
from .families import FamilyParams, build_gxyzw, catalog_entry, catalog_generate, solve_params

__version__ = "0.1.0"

__all__ = [
    "Graph", "GraphError", "Regularity", "RegularityClass", "build_graph", "classify_regularity",
    "degree_set", "edge_class_counts", "is_connected",
    "DegenerateGraphError", "Verdict", "ZagrebReport", "compare", "decomposition_sum", "f", "m1", "m2",
    "IntervalSpec", "StructureCase", "classify_equality_structure", "find_harmonic_collisions",
    "find_product_collisions", "is_good_interval", "scan_f_sign",
    "FamilyParams", "build_gxyzw", "catalog_entry", "catalog_generate", "solve_params",
]
