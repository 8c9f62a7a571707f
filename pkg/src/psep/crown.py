"""Weighted crown decompositions via redundant-vertex elimination.

``crown(g, b, p)`` assigns every component of ``G[V \\ b]`` to one adjacent
b-vertex, then keeps moving components off heavy stars until no component on
a strong M-alternating path out of a heavy (load >= 2p) star can be parked on
a light neighbor. The stars reachable from the heavy ones form the crown.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from ._debug import debug_enabled
from .bipartite import (AuxBipartite, Hierarchy, LoadClasses, build_aux,
                        build_hierarchy, classify, eliminate_redundant,
                        find_redundant, init_assignment)
from .errors import InternalError
from .graph import Graph, components_within


@dataclass(frozen=True)
class CrownDecomposition:
    """Partition ``(I, C, J)`` with a star-packing witness.

    ``witness`` maps every C-vertex to the components of ``G[I]`` forming its
    star; each star must weigh at least ``p``.
    """

    i_set: frozenset[int]
    c_set: frozenset[int]
    j_set: frozenset[int]
    witness: dict[int, tuple[frozenset[int], ...]]
    p: int
    iterations: int = 0
    aux: Optional[AuxBipartite] = field(default=None, compare=False, repr=False)
    assign: Optional[tuple[int, ...]] = field(default=None, compare=False, repr=False)


def check_hierarchy(h: AuxBipartite, assign: list[int], classes: LoadClasses,
                    hier: Hierarchy) -> list[str]:
    """Structural properties of a leveling: parity and pure-path predecessors."""
    problems = []
    if {j for j, lv in hier.b_level.items() if lv == 0} != set(classes.q1):
        problems.append("level 0 differs from Q1")
    for j, lv in hier.b_level.items():
        if lv % 2:
            problems.append(f"B-node {j} on odd level {lv}")
        elif lv > 0 and not any(
                hier.a_level.get(a) == lv - 1 and assign[a] != j for a in h.b_adj[j]):
            problems.append(f"B-node {j} on level {lv} has no non-M predecessor")
    for a, lv in hier.a_level.items():
        if lv % 2 == 0:
            problems.append(f"A-node {a} on even level {lv}")
        elif hier.b_level.get(assign[a]) != lv - 1:
            problems.append(f"A-node {a} on level {lv} not below its M-partner")
    return problems


def crown(g: Graph, b: Iterable[int], p: int, *,
          debug: Optional[bool] = None) -> CrownDecomposition:
    """Compute a p-weighted crown decomposition with ``C ⊆ b``.

    Every component of ``G[V \\ b]`` must have at most ``p`` vertices and touch
    ``b``. The result also satisfies ``|V \\ (b ∪ I)| <= (2p-1)|b \\ C|``.
    """
    debug = debug_enabled(debug)
    h = build_aux(g, b, p)
    assign = init_assignment(h)
    cap = max(g.n, 1) ** 2
    iterations = 0
    while True:
        classes = classify(h, assign, p)
        hier = build_hierarchy(h, assign, classes)
        if debug:
            problems = check_hierarchy(h, assign, classes, hier)
            if problems:
                raise InternalError("; ".join(problems))
        found = find_redundant(h, assign, classes, hier, p)
        if found is None:
            break
        iterations += 1
        if iterations > cap:
            raise InternalError(f"redundant-vertex elimination exceeded {cap} rounds")
        assign = eliminate_redundant(h, assign, *found)

    # the leveling is exactly the set reachable by strong M-alternating paths
    c_nodes = set(hier.b_level)
    if c_nodes & classes.q3:
        raise InternalError("crown contains a light star although no redundant vertex is left")
    stars: dict[int, list[frozenset[int]]] = {h.b_vertices[j]: [] for j in sorted(c_nodes)}
    i_set: set[int] = set()
    for a, j in enumerate(assign):
        if j in c_nodes:
            stars[h.b_vertices[j]].append(h.a_members[a])
            i_set.update(h.a_members[a])
    c_set = frozenset(stars)
    return CrownDecomposition(
        i_set=frozenset(i_set),
        c_set=c_set,
        j_set=frozenset(v for v in g.vertices() if v not in i_set and v not in c_set),
        witness={c: tuple(s) for c, s in stars.items()},
        p=p,
        iterations=iterations,
        aux=h,
        assign=tuple(assign),
    )


def crown_violations(g: Graph, cd: CrownDecomposition) -> list[str]:
    """Every way ``cd`` fails to be a p-weighted crown decomposition of ``g``."""
    problems = []
    i_set, c_set, j_set = set(cd.i_set), set(cd.c_set), set(cd.j_set)
    if i_set & c_set or i_set & j_set or c_set & j_set:
        problems.append("I, C, J are not pairwise disjoint")
    if i_set | c_set | j_set != set(g.vertices()):
        problems.append("I, C, J do not cover V")
    for v in sorted(i_set):
        bad = [w for w in g.adj[v] if w in j_set]
        if bad:
            problems.append(f"edge between I-vertex {v} and J-vertex {bad[0]}")
            break
    comps = {c: c for c in components_within(g, i_set)}
    for comp in comps:
        if len(comp) > cd.p:
            problems.append(f"component of G[I] at {min(comp)} has {len(comp)} > p vertices")
    if set(cd.witness) != c_set:
        problems.append("witness centers differ from C")
    used: set[frozenset[int]] = set()
    for center, leaves in sorted(cd.witness.items()):
        total = 0
        for leaf in leaves:
            leaf = frozenset(leaf)
            if leaf not in comps:
                problems.append(f"witness leaf at {min(leaf)} is not a component of G[I]")
                continue
            if leaf in used:
                problems.append(f"witness leaf at {min(leaf)} used twice")
            used.add(leaf)
            if not any(w == center for v in leaf for w in g.adj[v]):
                problems.append(f"witness leaf at {min(leaf)} not adjacent to {center}")
            total += len(leaf)
        if total < cd.p:
            problems.append(f"star at {center} weighs {total} < p={cd.p}")
    return problems


def verify_crown(g: Graph, cd: CrownDecomposition) -> bool:
    return not crown_violations(g, cd)
