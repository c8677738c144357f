"""Degree-driven dynamic geometric graphs: simulation and mean-field analysis."""

from ._core import (
    DegreeSet,
    GraphSnapshot,
    SegmentParams,
    TorusPoint,
    __version__,
    analyze_relationship,
    classify,
    connection_probability,
    edge_nervousness,
    growth_probability,
    isolated_limit,
    isolated_order_bound,
    predicted_order_monotonicity,
    redistributed_run,
    relationship,
    relationship_delta,
    run,
    run_summary,
    survival_probability,
    toroidal_distance,
    vertex_nervousness,
)

__all__ = [
    "DegreeSet",
    "GraphSnapshot",
    "SegmentParams",
    "TorusPoint",
    "__version__",
    "analyze_relationship",
    "classify",
    "connection_probability",
    "edge_nervousness",
    "growth_probability",
    "isolated_limit",
    "isolated_order_bound",
    "predicted_order_monotonicity",
    "redistributed_run",
    "relationship",
    "relationship_delta",
    "run",
    "run_summary",
    "survival_probability",
    "toroidal_distance",
    "vertex_nervousness",
]
