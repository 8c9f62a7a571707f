"""Splitting a graph into two disjoint connected pieces of more than p
vertices each, for connected graphs on more than 3p vertices that no single
vertex breaks into pieces of size at most p.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ._debug import debug_enabled
from .errors import InternalError, PreconditionError
from .graph import Graph, components_within, is_connected, neighborhood
from .oracle import is_p_size_separator


@dataclass(frozen=True)
class SplitPair:
    v1: frozenset[int]
    v2: frozenset[int]


def p_separator_vertex(g: Graph, p: int) -> Optional[int]:
    """Smallest vertex whose removal leaves only components of size <= p."""
    for v in g.vertices():
        if is_p_size_separator(g, (v,), p):
            return v
    return None


def split_violations(g: Graph, pair: SplitPair, p: int) -> list[str]:
    problems = []
    if pair.v1 & pair.v2:
        problems.append("v1 and v2 intersect")
    for name, part in (("v1", pair.v1), ("v2", pair.v2)):
        if len(part) < p + 1:
            problems.append(f"|{name}| = {len(part)} < p+1")
        if not is_connected(g, part):
            problems.append(f"{name} is not connected")
    return problems


def connect(g: Graph, p: int, *, debug: Optional[bool] = None) -> SplitPair:
    """Grow a connected set ``V1`` one neighbor at a time, always keeping the
    largest remaining component as ``V2`` and folding the rest into ``V1``,
    until ``V1`` has more than ``p`` vertices.
    """
    debug = debug_enabled(debug)
    if g.n <= 3 * p:
        raise PreconditionError(f"need more than 3p={3 * p} vertices, got {g.n}")
    if not is_connected(g, g.vertices()):
        raise PreconditionError("graph is not connected")
    sep = p_separator_vertex(g, p)
    if sep is not None:
        raise PreconditionError(f"vertex {sep} is a {p}-size separator vertex")

    everything = frozenset(g.vertices())
    v1: frozenset[int] = frozenset()
    v2 = everything
    while len(v1) <= p:
        for v in sorted(neighborhood(g, v1)):
            if not is_p_size_separator(g, v1 | {v}, p):
                break
        else:
            raise InternalError(f"no vertex of N(V1) extends V1={sorted(v1)}")
        rest = components_within(g, everything - v1 - {v})
        # largest component, ties to the smallest contained id
        v2 = max(rest, key=lambda c: (len(c), -min(c)))
        v1 = everything - v2
        if debug and not (is_connected(g, v1) and is_connected(g, v2)):
            raise InternalError("connect lost connectivity of V1 or V2")
    pair = SplitPair(v1, v2)
    problems = split_violations(g, pair, p)
    if problems:
        raise InternalError("; ".join(problems))
    return pair
