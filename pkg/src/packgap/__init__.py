"""Packing chromatic number and packing coloring gap of graphs."""
from .families import FamilyInstance, generate
from .gap import GapReport, gap_report, is_vertex_critical, mu_p
from .graph import Graph, GraphError
from .solver import PackingColoring, SolveBudget, SolveResult, brute_force_chi, chi_p, verify_coloring

__version__ = "0.1.0"

__all__ = [
    "FamilyInstance",
    "GapReport",
    "Graph",
    "GraphError",
    "PackingColoring",
    "SolveBudget",
    "SolveResult",
    "brute_force_chi",
    "chi_p",
    "gap_report",
    "generate",
    "is_vertex_critical",
    "mu_p",
    "verify_coloring",
]
