"""Deciding simultaneous embeddability of two planar graphs that share a
common subgraph, with preprocessing reductions and a brute-force oracle."""

from .graph_core import (
    EdgeLabel,
    GraphView,
    InstanceError,
    UnionGraph,
    blocks_and_cutvertices,
    classify_cutvertices,
    format_instance,
    parse_instance,
    planarity,
)

__all__ = [
    "EdgeLabel",
    "GraphView",
    "InstanceError",
    "UnionGraph",
    "blocks_and_cutvertices",
    "classify_cutvertices",
    "format_instance",
    "parse_instance",
    "planarity",
]

__version__ = "0.1.0"
