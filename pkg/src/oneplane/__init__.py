"""Toolkit for claw-free 1-planar graphs.

Models 1-plane drawings combinatorially (crossing pairs + rotation systems),
validates drawing conventions, decides 1-planarity of small graphs by
exhaustive search, computes claw/degree/connectivity invariants, reproduces
the degree-bound arithmetic, audits structural claims on concrete drawings,
and generates the extremal fixture families.
"""

from .graphs import (
    ClawWitness,
    Graph,
    GraphError,
    build_graph,
    complement,
    find_induced_claw,
    find_triangle,
    induced_subgraph,
    is_bipartite,
    line_graph,
    max_degree,
    vertex_connectivity,
)

__all__ = [
    "ClawWitness",
    "Graph",
    "GraphError",
    "build_graph",
    "complement",
    "find_induced_claw",
    "find_triangle",
    "induced_subgraph",
    "is_bipartite",
    "line_graph",
    "max_degree",
    "vertex_connectivity",
]

__version__ = "0.1.0"
