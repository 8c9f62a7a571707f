"""Kernelization for p-Size Separator: delete at most k vertices so that every
remaining component has at most p vertices."""

from .crown import CrownDecomposition, crown, verify_crown
from .graph import Graph, connected_components, maximal_p1_packing
from .kernel import kernelize, kernelize_quadratic, scc
from .local_adjust import connect, p_separator_vertex
from .oracle import is_p_size_separator, min_p_separator, min_p_separator_exhaustive

__all__ = [
    "CrownDecomposition", "Graph", "connect", "connected_components", "crown",
    "is_p_size_separator", "kernelize", "kernelize_quadratic", "maximal_p1_packing",
    "min_p_separator", "min_p_separator_exhaustive", "p_separator_vertex", "scc",
    "verify_crown",
]
