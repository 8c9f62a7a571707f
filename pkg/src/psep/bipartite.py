"""Vertex-weighted auxiliary bipartite graph of a partition ``(A, B)`` and the
star-assignment local search that runs on it.

Nodes on the A side are the components of ``G[A]`` (weight = size); nodes on
the B side are copies of the B-vertices (weight 0). A-nodes are indexed in
order of their smallest member, B-nodes in order of their vertex id.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import InternalError, PreconditionError
from .graph import Graph, components_within


@dataclass(frozen=True)
class AuxBipartite:
    a_members: tuple[frozenset[int], ...]
    b_vertices: tuple[int, ...]
    a_adj: tuple[tuple[int, ...], ...]  # A-node -> sorted B-node indices
    b_adj: tuple[tuple[int, ...], ...]  # B-node -> sorted A-node indices

    @property
    def a_weight(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.a_members)

    @property
    def n_a(self) -> int:
        return len(self.a_members)

    @property
    def n_b(self) -> int:
        return len(self.b_vertices)

    def b_index(self, vertex: int) -> int:
        return self.b_vertices.index(vertex)


def build_aux(g: Graph, b: Iterable[int], p: int) -> AuxBipartite:
    """Auxiliary bipartite graph of ``g`` with partition ``(V \\ b, b)``.

    Raises PreconditionError if some component of ``G[V \\ b]`` has more than
    ``p`` vertices.
    """
    b_vertices = tuple(sorted(set(b)))
    b_pos = {v: j for j, v in enumerate(b_vertices)}
    comps = components_within(g, (v for v in g.vertices() if v not in b_pos))
    for comp in comps:
        if len(comp) > p:
            raise PreconditionError(
                f"component of G[A] containing {min(comp)} has {len(comp)} > p={p} vertices")
    a_adj = []
    b_adj: list[list[int]] = [[] for _ in b_vertices]
    for i, comp in enumerate(comps):
        nb = sorted({b_pos[w] for v in comp for w in g.adj[v] if w in b_pos})
        a_adj.append(tuple(nb))
        for j in nb:
            b_adj[j].append(i)
    return AuxBipartite(tuple(comps), b_vertices, tuple(a_adj),
                        tuple(tuple(x) for x in b_adj))


def init_assignment(h: AuxBipartite) -> list[int]:
    """Assign every A-node to its smallest B-neighbor.

    The assignment is a plain list: ``assign[a]`` is the B-node index of the
    single M-edge at A-node ``a``.
    """
    assign = []
    for a, nb in enumerate(h.a_adj):
        if not nb:
            raise PreconditionError(
                f"component containing vertex {min(h.a_members[a])} is not adjacent to B")
        assign.append(nb[0])
    return assign


@dataclass(frozen=True)
class LoadClasses:
    load: tuple[int, ...]
    q1: frozenset[int]
    q2: frozenset[int]
    q3: frozenset[int]
    a1: frozenset[int] = field(default=frozenset())
    a2: frozenset[int] = field(default=frozenset())
    a3: frozenset[int] = field(default=frozenset())


def loads(h: AuxBipartite, assign: list[int]) -> list[int]:
    load = [0] * h.n_b
    for a, j in enumerate(assign):
        load[j] += len(h.a_members[a])
    return load


def classify(h: AuxBipartite, assign: list[int], p: int) -> LoadClasses:
    """Split B-nodes by star load: Q1 at least 2p, Q2 in [p, 2p), Q3 below p."""
    load = loads(h, assign)
    q1 = frozenset(j for j, x in enumerate(load) if x >= 2 * p)
    q2 = frozenset(j for j, x in enumerate(load) if p <= x < 2 * p)
    q3 = frozenset(j for j, x in enumerate(load) if x < p)
    a1 = frozenset(a for a, j in enumerate(assign) if j in q1)
    a2 = frozenset(a for a, j in enumerate(assign) if j in q2)
    a3 = frozenset(a for a, j in enumerate(assign) if j in q3)
    return LoadClasses(tuple(load), q1, q2, q3, a1, a2, a3)


@dataclass(frozen=True)
class Hierarchy:
    """Levels of the nodes reachable from Q1 by strong M-alternating paths.

    B-nodes sit on even levels, A-nodes on odd ones; unreached nodes are
    absent from both maps.
    """

    a_level: dict[int, int]
    b_level: dict[int, int]

    def __len__(self) -> int:
        return len(self.a_level) + len(self.b_level)

    @property
    def max_level(self) -> int:
        return max([*self.a_level.values(), *self.b_level.values()], default=-1)


def build_hierarchy(h: AuxBipartite, assign: list[int],
                    classes: LoadClasses) -> Hierarchy:
    """Leveled BFS from Q1: M-edges lead B -> A, non-M edges lead A -> B."""
    stars: list[list[int]] = [[] for _ in range(h.n_b)]
    for a, j in enumerate(assign):
        stars[j].append(a)
    b_level = {j: 0 for j in sorted(classes.q1)}
    a_level: dict[int, int] = {}
    frontier = sorted(b_level)
    level = 0
    while frontier:
        odd = []
        for j in frontier:
            for a in stars[j]:
                a_level[a] = level + 1
                odd.append(a)
        nxt = []
        for a in odd:
            for j in h.a_adj[a]:
                if j != assign[a] and j not in b_level:
                    b_level[j] = level + 2
                    nxt.append(j)
        frontier = sorted(nxt)
        level += 2
    return Hierarchy(a_level, b_level)


def find_redundant(h: AuxBipartite, assign: list[int], classes: LoadClasses,
                   hier: Hierarchy, p: int) -> Optional[tuple[int, int]]:
    """First ``(a, b)`` with ``a`` on odd level i, ``b`` a non-M neighbor on
    level i+1, and ``load(b) + w(a) < 2p``; ordered by level, then ids.
    """
    for a in sorted(hier.a_level, key=lambda x: (hier.a_level[x], x)):
        lvl = hier.a_level[a]
        w = len(h.a_members[a])
        for j in h.a_adj[a]:
            if j == assign[a] or hier.b_level.get(j) != lvl + 1:
                continue
            if classes.load[j] + w < 2 * p:
                return a, j
    return None


def eliminate_redundant(h: AuxBipartite, assign: list[int], a: int, b: int) -> list[int]:
    """Copy of ``assign`` with A-node ``a`` moved onto B-node ``b``."""
    if b not in h.a_adj[a]:
        raise InternalError(f"A-node {a} is not adjacent to B-node {b}")
    out = list(assign)
    out[a] = b
    return out
