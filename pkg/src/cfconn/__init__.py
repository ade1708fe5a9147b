"""Conflict-free connectivity toolkit: polynomial verifiers, exact solvers,
path-enumeration oracles and NP-completeness reduction gadgets."""

from .coloring import EdgeColoring, PairSet, VertexColoring
from .graph import DistanceTable, Graph, GraphError, build_graph
from .solve import SolveResult, decide_subset_scfc, solve_cfc, solve_rc_small, solve_scfc, solve_vcfc
from .verify import VerifyReport, verify_cfc_edge, verify_cfc_vertex, verify_scfc, verify_scfc_subset

__all__ = [
    "DistanceTable",
    "EdgeColoring",
    "Graph",
    "GraphError",
    "PairSet",
    "SolveResult",
    "VertexColoring",
    "VerifyReport",
    "build_graph",
    "decide_subset_scfc",
    "solve_cfc",
    "solve_rc_small",
    "solve_scfc",
    "solve_vcfc",
    "verify_cfc_edge",
    "verify_cfc_vertex",
    "verify_scfc",
    "verify_scfc_subset",
]

__version__ = "0.1.0"
