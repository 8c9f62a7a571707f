"""Undirected simple graphs on dense integer ids and the traversal helpers
every other module builds on.

Vertex sets are plain ``frozenset[int]``; wherever order matters it is
ascending id, so all "arbitrary" choices in the algorithms are reproducible.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import InputError

VertexSet = frozenset


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph with vertices ``0..n-1``."""

    adj: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, silently dropping self-loops and repeated edges."""
        if n < 0:
            raise InputError(f"negative vertex count {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                continue
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def vertices(self) -> range:
        return range(len(self.adj))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, a in enumerate(self.adj) for v in a if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])


@dataclass(frozen=True)
class SubgraphPacking:
    """Vertex-disjoint connected subgraphs of exactly ``p + 1`` vertices."""

    parts: tuple[frozenset[int], ...]
    p: int

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset().union(*self.parts)

    def __len__(self) -> int:
        return len(self.parts)


def _check_subset(g: Graph, s: Iterable[int]) -> None:
    for v in s:
        if not 0 <= v < g.n:
            raise InputError(f"vertex {v} out of range for n={g.n}")


def bfs_order(g: Graph, start: int, alive: Optional[frozenset[int] | set[int]] = None,
              limit: Optional[int] = None) -> list[int]:
    """Vertices reachable from ``start`` inside ``alive``, in BFS order.

    Neighbors are expanded in ascending id. Stops after ``limit`` vertices.
    """
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue and (limit is None or len(order) < limit):
        u = queue.popleft()
        for w in g.adj[u]:
            if w in seen or (alive is not None and w not in alive):
                continue
            seen.add(w)
            order.append(w)
            queue.append(w)
            if limit is not None and len(order) >= limit:
                break
    return order


def components_within(g: Graph, alive: Iterable[int]) -> list[frozenset[int]]:
    """Connected components of ``G[alive]``, ordered by smallest member."""
    alive = set(alive)
    comps = []
    remaining = set(alive)
    for v in sorted(alive):
        if v not in remaining:
            continue
        comp = bfs_order(g, v, alive)
        remaining.difference_update(comp)
        comps.append(frozenset(comp))
    return comps


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Partition of ``0..n-1`` into components, ordered by smallest id."""
    return components_within(g, range(g.n))


def is_connected(g: Graph, s: Iterable[int]) -> bool:
    """True iff ``G[s]`` is connected; the empty set counts as connected."""
    s = set(s)
    if not s:
        return True
    return len(bfs_order(g, min(s), s)) == len(s)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``G[s]`` renumbered ``0..|s|-1`` and the map back to ``g`` ids.

    New ids follow ascending original id, so ``id_map`` is sorted.
    """
    id_map = sorted(set(s))
    _check_subset(g, id_map)
    index = {v: i for i, v in enumerate(id_map)}
    adj = tuple(
        tuple(index[w] for w in g.adj[v] if w in index) for v in id_map
    )
    return Graph(adj), id_map


def neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """Open neighborhood of ``s``; by convention ``N(empty) = V``."""
    s = frozenset(s)
    if not s:
        return frozenset(range(g.n))
    _check_subset(g, s)
    return frozenset(w for v in s for w in g.adj[v] if w not in s)


def greedy_packing(g: Graph, p: int, alive: Iterable[int]) -> list[frozenset[int]]:
    """Greedily pack connected ``(p+1)``-subsets into ``G[alive]`` until every
    residual component has at most ``p`` vertices.

    Repeatedly takes the first residual component (by smallest id) that is
    too large and cuts off the first ``p + 1`` vertices of a BFS from its
    smallest vertex.
    """
    parts = []
    # residual components keyed by smallest member; cutting a part out of a
    # component only splits that component
    heap = [(min(c), c) for c in components_within(g, alive)]
    heapq.heapify(heap)
    while heap:
        _, comp = heapq.heappop(heap)
        if len(comp) <= p:
            continue
        part = frozenset(bfs_order(g, min(comp), comp, limit=p + 1))
        parts.append(part)
        for piece in components_within(g, comp - part):
            heapq.heappush(heap, (min(piece), piece))
    return parts


def maximal_p1_packing(g: Graph, p: int) -> SubgraphPacking:
    """Maximal packing of connected ``(p+1)``-vertex subgraphs."""
    if p < 1:
        raise InputError(f"p must be >= 1, got {p}")
    return SubgraphPacking(tuple(greedy_packing(g, p, range(g.n))), p)


def connected_truncate(g: Graph, s: Iterable[int], target: int) -> frozenset[int]:
    """Exactly ``target`` vertices of ``s`` inducing a connected subgraph.

    Takes the first ``target`` vertices of a BFS inside ``G[s]`` from its
    smallest member; ``G[s]`` must be connected.
    """
    s = frozenset(s)
    if target < 1 or len(s) < target:
        raise InputError(f"cannot take {target} vertices from a set of {len(s)}")
    order = bfs_order(g, min(s), s, limit=target)
    if len(order) < target:
        raise InputError("set does not induce a connected subgraph")
    return frozenset(order)
