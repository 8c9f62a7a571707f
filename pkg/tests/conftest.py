from __future__ import annotations

import functools
import itertools

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from psep.graph import Graph, connected_components, induced_subgraph
from psep.oracle import min_p_separator

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 12, connected: bool = False) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), max_size=3 * n)) if pairs else []
    if connected:
        edges += [(i, draw(st.integers(0, i - 1))) for i in range(1, n)]
    return Graph.from_edges(n, edges)


@functools.lru_cache(maxsize=None)
def gamma(g: Graph, p: int) -> int:
    return min_p_separator(g, p).size


def make(n: int, edges) -> Graph:
    return Graph.from_edges(n, edges)


@pytest.fixture
def k13() -> Graph:
    # center 0, leaves 1..3
    return make(4, [(0, 1), (0, 2), (0, 3)])


def without_small_components(g: Graph, p: int) -> Graph:
    """Drop components of at most p vertices; they never need a separator vertex."""
    keep = set().union(*[c for c in connected_components(g) if len(c) > p])
    return induced_subgraph(g, keep)[0]
