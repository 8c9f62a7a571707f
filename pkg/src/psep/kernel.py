"""Kernelization for p-Size Separator.

Two modes:

* ``kernelize`` (linear, at most ``9pk`` vertices) runs ``scc`` on each large
  component. ``scc`` keeps a set of bases (single vertices or connected
  ``(p+1)``-vertex groups), splits groups whose neighborhood is big and
  well connected, contracts groups to single vertices, and takes a weighted
  crown with threshold ``4p`` on the contracted graph; a group that lands in
  the crown is replaced by one of its separator vertices and the loop
  restarts.
* ``kernelize_quadratic`` (at most ``2p(p+1)k`` vertices) runs ``crown`` with
  B fixed to a maximal packing of connected ``(p+1)``-subgraphs.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from ._debug import debug_enabled
from .crown import CrownDecomposition, crown, crown_violations
from .errors import InputError, InternalError
from .graph import (Graph, bfs_order, components_within, connected_components,
                    connected_truncate, greedy_packing, induced_subgraph,
                    is_connected, maximal_p1_packing)
from .local_adjust import SplitPair, connect, p_separator_vertex

log = logging.getLogger(__name__)

SINGLE = "single"
GROUP = "group"

# Q4 witness: single-base vertex -> components of G[A] forming its star
Witness = dict[int, tuple[frozenset[int], ...]]


@dataclass(frozen=True)
class Base:
    kind: str
    vertices: frozenset[int]

    @classmethod
    def single(cls, v: int) -> "Base":
        return cls(SINGLE, frozenset([v]))

    @classmethod
    def group(cls, vs) -> "Base":
        return cls(GROUP, frozenset(vs))

    @property
    def vertex(self) -> int:
        (v,) = self.vertices
        return v


@dataclass(frozen=True)
class BaseSet:
    bases: tuple[Base, ...]

    @property
    def b_set(self) -> frozenset[int]:
        return frozenset().union(*(b.vertices for b in self.bases))

    @property
    def singles(self) -> list[int]:
        return [b.vertex for b in self.bases if b.kind == SINGLE]

    def __len__(self) -> int:
        return len(self.bases)

    def replace(self, idx: int, *new: Base) -> "BaseSet":
        return BaseSet(self.bases[:idx] + tuple(new) + self.bases[idx + 1:])


def a_components(g: Graph, baseset: BaseSet) -> list[frozenset[int]]:
    b = baseset.b_set
    return components_within(g, (v for v in g.vertices() if v not in b))


def associate_vertices(g: Graph, baseset: BaseSet, s: Base,
                       comps: Optional[list[frozenset[int]]] = None) -> frozenset[int]:
    """``s`` plus every component of ``G[A]`` adjacent to it."""
    if comps is None:
        comps = a_components(g, baseset)
    out = set(s.vertices)
    for comp in comps:
        if any(w in s.vertices for v in comp for w in g.adj[v]):
            out.update(comp)
    return frozenset(out)


def associate_subgraph(g: Graph, baseset: BaseSet, s: Base) -> tuple[Graph, list[int]]:
    """The s-associate subgraph, renumbered, with its map back to ``g``."""
    return induced_subgraph(g, associate_vertices(g, baseset, s))


def base_violations(g: Graph, baseset: BaseSet, p: int,
                    witness: Optional[Witness] = None) -> list[str]:
    """Which of the base-properties Q1, Q2 and Q4 fail (Q3 needs history)."""
    problems = []
    seen: set[int] = set()
    for base in baseset.bases:
        if base.vertices & seen:
            problems.append(f"Q2: base at {min(base.vertices)} overlaps another base")
        seen |= base.vertices
        if base.kind == SINGLE and len(base.vertices) != 1:
            problems.append("Q2: single-base with more than one vertex")
        if base.kind == GROUP and (len(base.vertices) != p + 1
                                   or not is_connected(g, base.vertices)):
            problems.append(f"Q2: group-base at {min(base.vertices)} is not a connected (p+1)-set")
    comps = a_components(g, baseset)
    for comp in comps:
        if len(comp) > p:
            problems.append(f"Q1: component of G[A] at {min(comp)} has {len(comp)} vertices")
    if witness is not None:
        problems.extend(q4_violations(g, baseset, witness, p, comps))
    return problems


def q4_violations(g: Graph, baseset: BaseSet, witness: Witness, p: int,
                  comps: Optional[list[frozenset[int]]] = None) -> list[str]:
    if comps is None:
        comps = a_components(g, baseset)
    comp_set = set(comps)
    problems = []
    used: set[frozenset[int]] = set()
    for v in baseset.singles:
        total = 0
        for leaf in witness.get(v, ()):
            if leaf not in comp_set:
                problems.append(f"Q4: leaf at {min(leaf)} of {v} is not a component of G[A]")
            elif leaf in used:
                problems.append(f"Q4: leaf at {min(leaf)} shared by two stars")
            elif not any(w == v for x in leaf for w in g.adj[x]):
                problems.append(f"Q4: leaf at {min(leaf)} not adjacent to {v}")
            else:
                total += len(leaf)
            used.add(leaf)
        if total < 4 * p:
            problems.append(f"Q4: star at single-base {v} weighs {total} < 4p={4 * p}")
    return problems


def find_extendable(g: Graph, baseset: BaseSet, p: int) -> Optional[tuple[int, SplitPair]]:
    """First group-base whose associate subgraph has more than 3p vertices and
    no p-size separator vertex, with the split of that subgraph (in ``g`` ids).
    """
    comps = a_components(g, baseset)
    for idx, base in enumerate(baseset.bases):
        if base.kind != GROUP:
            continue
        verts = associate_vertices(g, baseset, base, comps)
        if len(verts) <= 3 * p:
            continue
        sub, id_map = induced_subgraph(g, verts)
        if p_separator_vertex(sub, p) is not None:
            continue
        pair = connect(sub, p)
        return idx, SplitPair(frozenset(id_map[v] for v in pair.v1),
                              frozenset(id_map[v] for v in pair.v2))
    return None


def _trim(g: Graph, side: frozenset[int], s: frozenset[int], p: int) -> frozenset[int]:
    # Drop whole components of G[side - s] while the side has 2p+1 or more
    # vertices. A component whose removal would disconnect the side is skipped.
    cur = set(side)
    while len(cur) >= 2 * p + 1:
        for piece in components_within(g, cur - s):
            if is_connected(g, cur - piece):
                cur -= piece
                break
        else:
            break
    return frozenset(cur)


def extension_operation(g: Graph, baseset: BaseSet, idx: int, split: SplitPair,
                        witness: Witness, p: int) -> BaseSet:
    """Replace group-base ``idx`` by two group-bases cut from ``split`` and turn
    every single-base into a group-base grown into its own witness star.
    """
    s = baseset.bases[idx].vertices
    new_groups = [connected_truncate(g, _trim(g, side, s, p), p + 1)
                  for side in (split.v1, split.v2)]
    out = baseset.replace(idx, *(Base.group(x) for x in new_groups))
    used = set().union(*new_groups)
    b_set = out.b_set
    singles = out.singles
    claimed = {v: frozenset().union(*witness.get(v, ())) for v in singles}
    free = set(v for v in g.vertices() if v not in b_set).difference(*claimed.values())
    bases = list(out.bases)
    for pos, base in enumerate(bases):
        if base.kind != SINGLE:
            continue
        v = base.vertex
        region = frozenset(bfs_order(g, v, {v} | (claimed[v] - used)))
        if len(region) < p + 1:
            # the star lost too much to the new group-bases; borrow vertices
            # nobody else's star relies on
            log.debug("extension: single-base %d borrows unclaimed vertices", v)
            region = frozenset(bfs_order(g, v, {v} | ((claimed[v] | free) - used)))
        if len(region) < p + 1:
            raise InternalError(f"single-base {v} cannot be grown to p+1 vertices")
        grown = frozenset(bfs_order(g, v, region, limit=p + 1))
        used |= grown
        bases[pos] = Base.group(grown)
    return BaseSet(tuple(bases))


def complete_packing(g: Graph, baseset: BaseSet, p: int) -> BaseSet:
    """Append group-bases until every component of ``G[A]`` has <= p vertices."""
    b = baseset.b_set
    extra = greedy_packing(g, p, (v for v in g.vertices() if v not in b))
    if not extra:
        return baseset
    return BaseSet(baseset.bases + tuple(Base.group(x) for x in extra))


@dataclass(frozen=True)
class ContractedGraph:
    graph: Graph
    group_vertex_of: dict[int, int]  # base index -> contracted id
    vertex_of: dict[int, int]        # contracted id -> original vertex
    base_of: dict[int, int]          # contracted id -> base index
    to_contracted: dict[int, int]    # original vertex -> contracted id


def contract(g: Graph, baseset: BaseSet) -> ContractedGraph:
    """Merge every group-base into one vertex; plain vertices keep their
    relative order and group-vertices follow in base order.
    """
    in_group = {}
    for idx, base in enumerate(baseset.bases):
        if base.kind == GROUP:
            for v in base.vertices:
                in_group[v] = idx
    plain = [v for v in g.vertices() if v not in in_group]
    to_c = {v: i for i, v in enumerate(plain)}
    group_vertex_of = {}
    for idx, base in enumerate(baseset.bases):
        if base.kind == GROUP:
            group_vertex_of[idx] = len(plain) + len(group_vertex_of)
    for v, idx in in_group.items():
        to_c[v] = group_vertex_of[idx]
    edges = [(to_c[u], to_c[v]) for u, v in g.edges()]
    graph = Graph.from_edges(len(plain) + len(group_vertex_of), edges)
    return ContractedGraph(
        graph=graph,
        group_vertex_of=group_vertex_of,
        vertex_of={i: v for i, v in enumerate(plain)},
        base_of={c: idx for idx, c in group_vertex_of.items()},
        to_contracted=to_c,
    )


def _retarget_witness(g: Graph, baseset: BaseSet, claims: dict[int, list[frozenset[int]]],
                      p: int) -> tuple[Witness, int]:
    """Re-express star leaves as components of the current ``G[A]``.

    Old leaves merge into larger components when a group-base shrinks to a
    single vertex. A merged component claimed by several stars goes to the
    lightest claimant; stars left under 4p then take unclaimed adjacent
    components or spare ones from heavier neighbors. Returns the witness and
    how many repair moves were needed.
    """
    comps = a_components(g, baseset)
    comp_of = {v: c for c in comps for v in c}
    adjacent = {v: {comp_of[w] for w in g.adj[v] if w in comp_of} for v in claims}
    owned: dict[int, set[frozenset[int]]] = {}
    for center, leaves in claims.items():
        owned[center] = {comp_of[x] for leaf in leaves for x in leaf if x in comp_of}
        owned[center] &= adjacent[center]
    moves = 0

    def weight(center: int) -> int:
        return sum(len(c) for c in owned[center])

    claimants: dict[frozenset[int], list[int]] = {}
    for center in sorted(owned):
        for c in owned[center]:
            claimants.setdefault(c, []).append(center)
    for c in sorted(claimants, key=min):
        if len(claimants[c]) < 2:
            continue
        moves += 1
        for center in claimants[c]:
            owned[center].discard(c)
        winner = min(claimants[c], key=lambda x: (weight(x), x))
        owned[winner].add(c)

    taken = set().union(*owned.values()) if owned else set()
    progress = True
    while progress:
        progress = False
        for center in sorted(owned):
            if weight(center) >= 4 * p:
                continue
            for c in sorted(adjacent[center] - taken, key=lambda c: (-len(c), min(c))):
                owned[center].add(c)
                taken.add(c)
                moves += 1
                progress = True
                if weight(center) >= 4 * p:
                    break
            if weight(center) >= 4 * p:
                continue
            for other in sorted(owned):
                if other == center:
                    continue
                for c in sorted(owned[other] & adjacent[center], key=min):
                    if weight(other) - len(c) >= 4 * p:
                        owned[other].discard(c)
                        owned[center].add(c)
                        moves += 1
                        progress = True
                        if weight(center) >= 4 * p:
                            break
                if weight(center) >= 4 * p:
                    break
    witness = {v: tuple(sorted(owned[v], key=min)) for v in sorted(owned)}
    return witness, moves


@dataclass(frozen=True)
class SccResult:
    decomposition: CrownDecomposition
    bases: BaseSet
    b_star_minus_c: int  # |B* \ C| at the final crown run
    groups: int          # group-vertices in B*, all of them outside C
    step3: int
    step45: int
    crown_rounds: int
    witness_repairs: int


def scc(g: Graph, p: int, *, debug: Optional[bool] = None,
        gamma: Optional[int] = None) -> SccResult:
    """Weighted crown decomposition of a connected graph with the linear size
    guarantee ``|V \\ (C ∪ I)| <= 9p * γ_p(G[J])``.

    ``gamma`` (the exact γ_p of ``g``, when known) tightens the debug checks.
    """
    debug = debug_enabled(debug)
    if p < 1:
        raise InputError(f"p must be >= 1, got {p}")
    if not is_connected(g, g.vertices()):
        raise InputError("scc expects a connected graph")
    if g.n <= p:
        return SccResult(CrownDecomposition(frozenset(), frozenset(), frozenset(g.vertices()),
                                            {}, p), BaseSet(()), 0, 0, 0, 0, 0, 0)
    step3_cap = max(g.n, 1)
    step45_cap = max(g.n, 1) ** 2
    baseset = BaseSet(tuple(Base.group(x) for x in maximal_p1_packing(g, p).parts))
    witness: Witness = {}
    step3 = step45 = rounds = repairs = 0
    base_count = len(baseset)

    def check(where: str) -> None:
        nonlocal base_count
        if not debug:
            return
        problems = base_violations(g, baseset, p, witness)
        if len(baseset) < base_count:
            problems.append(f"Q3: base count dropped from {base_count} to {len(baseset)}")
        if gamma is not None and len(baseset) > gamma:
            problems.append(f"Q3: {len(baseset)} bases exceed γ_p = {gamma}")
        if problems:
            raise InternalError(f"after {where}: " + "; ".join(problems))
        base_count = len(baseset)

    check("initial packing")
    while True:
        while (found := find_extendable(g, baseset, p)) is not None:
            step3 += 1
            if step3 > step3_cap:
                raise InternalError(f"extension ran more than {step3_cap} times")
            idx, split = found
            baseset = extension_operation(g, baseset, idx, split, witness, p)
            witness = {}
            baseset = complete_packing(g, baseset, p)
            check("extension")

        step45 += 1
        if step45 > step45_cap:
            raise InternalError(f"crown/replace loop ran more than {step45_cap} times")
        cg = contract(g, baseset)
        b_star = [cg.to_contracted[v] for v in baseset.singles] + sorted(cg.base_of)
        cd = crown(cg.graph, b_star, 4 * p, debug=debug)
        rounds += cd.iterations

        def lift(leaves: tuple[frozenset[int], ...]) -> list[frozenset[int]]:
            return [frozenset(cg.vertex_of[x] for x in leaf) for leaf in leaves]

        claims = {}
        for v in baseset.singles:
            c = cg.to_contracted[v]
            claims[v] = lift(cd.witness[c]) if c in cd.c_set else list(witness.get(v, ()))
        hit = sorted(c for c in cd.c_set if c in cg.base_of)
        if not hit:
            break

        u = hit[0]
        idx = cg.base_of[u]
        sub, id_map = associate_subgraph(g, baseset, baseset.bases[idx])
        local = p_separator_vertex(sub, p)
        if local is None:
            raise InternalError(f"group-base {idx} in the crown has no p-size separator vertex")
        v = id_map[local]
        claims[v] = lift(cd.witness[u])
        baseset = baseset.replace(idx, Base.single(v))
        witness, moves = _retarget_witness(g, baseset, claims, p)
        repairs += moves
        check("group-base replacement")

    witness = {v: tuple(claims[v]) for v in baseset.singles}
    check("final crown")
    stars = {cg.vertex_of[c]: tuple(lift(cd.witness[c])) for c in sorted(cd.c_set)}
    i_set = frozenset(cg.vertex_of[x] for x in cd.i_set)
    c_set = frozenset(stars)
    result = CrownDecomposition(
        i_set=i_set,
        c_set=c_set,
        j_set=frozenset(v for v in g.vertices() if v not in i_set and v not in c_set),
        witness=stars,
        p=p,
        iterations=rounds,
    )
    if debug:
        problems = crown_violations(g, result)
        if problems:
            raise InternalError("scc output: " + "; ".join(problems))
    return SccResult(
        decomposition=result,
        bases=baseset,
        b_star_minus_c=len(b_star) - len(cd.c_set),
        groups=len(cg.base_of),
        step3=step3,
        step45=step45,
        crown_rounds=rounds,
        witness_repairs=repairs,
    )


LINEAR = "linear"
QUADRATIC = "quadratic"
REDUCED = "reduced"
NO_INSTANCE = "no_instance"


@dataclass(frozen=True)
class KernelOutcome:
    verdict: str
    kernel_graph: Graph
    kernel_ids: list[int]          # kernel vertex -> input vertex
    forced: frozenset[int]
    budget_used: int
    mode: str
    k: Optional[int] = None
    bound: Optional[int] = None
    decomposition: Optional[CrownDecomposition] = None
    stats: dict = field(default_factory=dict)


def _merge(g: Graph, p: int, i_set: set[int], c_set: set[int],
           witness: dict[int, tuple[frozenset[int], ...]]) -> CrownDecomposition:
    return CrownDecomposition(
        i_set=frozenset(i_set),
        c_set=frozenset(c_set),
        j_set=frozenset(v for v in g.vertices() if v not in i_set and v not in c_set),
        witness=dict(sorted(witness.items())),
        p=p,
    )


def kernelize(g: Graph, p: int, k: Optional[int] = None, *,
              debug: Optional[bool] = None) -> KernelOutcome:
    """Linear kernel: ``scc`` per component of more than ``p`` vertices."""
    if p < 1:
        raise InputError(f"p must be >= 1, got {p}")
    if k is not None and k < 0:
        raise InputError(f"k must be >= 0, got {k}")
    i_set: set[int] = set()
    c_set: set[int] = set()
    witness: dict[int, tuple[frozenset[int], ...]] = {}
    stats = {"components": 0, "stripped": 0, "step3": 0, "step45": 0,
             "crown_rounds": 0, "witness_repairs": 0}
    for comp in connected_components(g):
        if len(comp) <= p:
            stats["stripped"] += len(comp)
            i_set |= comp
            continue
        stats["components"] += 1
        sub, id_map = induced_subgraph(g, comp)
        res = scc(sub, p, debug=debug)
        cd = res.decomposition
        i_set.update(id_map[v] for v in cd.i_set)
        c_set.update(id_map[v] for v in cd.c_set)
        for center, leaves in cd.witness.items():
            witness[id_map[center]] = tuple(frozenset(id_map[x] for x in leaf) for leaf in leaves)
        for key in ("step3", "step45", "crown_rounds", "witness_repairs"):
            stats[key] += getattr(res, key)
    decomposition = _merge(g, p, i_set, c_set, witness)
    kernel_graph, kernel_ids = induced_subgraph(g, decomposition.j_set)
    budget = len(c_set)
    verdict, bound = REDUCED, None
    if k is not None:
        bound = 9 * p * (k - budget) if budget <= k else 0
        if budget > k or kernel_graph.n > bound:
            verdict = NO_INSTANCE
    return KernelOutcome(verdict, kernel_graph, kernel_ids, frozenset(c_set), budget,
                         LINEAR, k, bound, decomposition, stats)


def kernelize_quadratic(g: Graph, p: int, k: Optional[int] = None, *,
                        debug: Optional[bool] = None) -> KernelOutcome:
    """Quadratic kernel: crown against a maximal (p+1)-subgraph packing until
    ``|A| <= (2p-1)|B|``.
    """
    if p < 1:
        raise InputError(f"p must be >= 1, got {p}")
    if k is not None and k < 0:
        raise InputError(f"k must be >= 0, got {k}")
    packing = maximal_p1_packing(g, p)
    bound = None if k is None else 2 * p * (p + 1) * k
    stats = {"packing": len(packing), "rounds": 0, "crown_rounds": 0, "stripped": 0}
    if k is not None and len(packing) > k:
        return KernelOutcome(NO_INSTANCE, g, list(g.vertices()), frozenset(), 0,
                             QUADRATIC, k, bound, None, stats)
    b = set(packing.vertices)
    alive = set(g.vertices())
    i_set: set[int] = set()
    c_set: set[int] = set()
    witness: dict[int, tuple[frozenset[int], ...]] = {}
    while True:
        for comp in components_within(g, alive):
            if not comp & b:
                stats["stripped"] += len(comp)
                i_set |= comp
                alive -= comp
        a_size = len(alive - b)
        if a_size <= (2 * p - 1) * len(b):
            break
        sub, id_map = induced_subgraph(g, alive)
        local = {v: i for i, v in enumerate(id_map)}
        cd = crown(sub, [local[v] for v in sorted(b)], p, debug=debug)
        if not cd.c_set:
            raise InternalError(f"crown made no progress with |A|={a_size} > (2p-1)|B|")
        stats["rounds"] += 1
        stats["crown_rounds"] += cd.iterations
        removed_i = {id_map[v] for v in cd.i_set}
        removed_c = {id_map[v] for v in cd.c_set}
        for center, leaves in cd.witness.items():
            witness[id_map[center]] = tuple(frozenset(id_map[x] for x in leaf) for leaf in leaves)
        i_set |= removed_i
        c_set |= removed_c
        alive -= removed_i | removed_c
        b -= removed_c
    decomposition = _merge(g, p, i_set, c_set, witness)
    kernel_graph, kernel_ids = induced_subgraph(g, alive)
    budget = len(c_set)
    verdict = REDUCED
    if k is not None and (budget > k or kernel_graph.n > bound):
        verdict = NO_INSTANCE
    return KernelOutcome(verdict, kernel_graph, kernel_ids, frozenset(c_set), budget,
                         QUADRATIC, k, bound, decomposition, stats)
