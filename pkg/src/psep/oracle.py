"""Exact p-size separators for small graphs.

Two independent routes: a branch-and-reduce search over connected
``(p+1)``-subgraphs, and a plain enumeration of vertex subsets by size. They
exist to check the kernelization, not to be fast.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .errors import InputError
from .graph import Graph, bfs_order, components_within, greedy_packing

EXHAUSTIVE_MAX_N = 25


@dataclass(frozen=True)
class OracleResult:
    separator: frozenset[int]
    size: int
    optimal: bool = True


def is_p_size_separator(g: Graph, s: Iterable[int], p: int) -> bool:
    """True iff every component of ``G - s`` has at most ``p`` vertices."""
    s = set(s)
    return all(len(c) <= p for c in components_within(g, (v for v in g.vertices() if v not in s)))


def _pick_subgraph(g: Graph, p: int, comp: frozenset[int], fixed: frozenset[int]) -> list[int]:
    # Start next to an undeletable vertex when there is one: such a subgraph
    # has fewer branches. Otherwise start at a maximum-degree vertex.
    starts = sorted(v for v in comp if v in fixed)
    if starts:
        start = starts[0]
    else:
        start = max(sorted(comp), key=lambda v: sum(1 for w in g.adj[v] if w in comp))
    return bfs_order(g, start, comp, limit=p + 1)


class _Search:
    """Branch-and-reduce with per-component memoization.

    ``fixed`` vertices may not be deleted: once the branch deleting ``v`` has
    been explored, later sibling branches keep ``v``.
    """

    def __init__(self, g: Graph, p: int):
        self.g = g
        self.p = p
        # (component, fixed part) -> (lower bound, optimal solution or None)
        self.memo: dict[tuple[frozenset[int], frozenset[int]], tuple[int, Optional[list[int]]]] = {}

    def lower_bound(self, comp: frozenset[int]) -> int:
        # each packed subgraph needs its own deletion
        return len(greedy_packing(self.g, self.p, comp))

    def solve(self, comp: frozenset[int], fixed: frozenset[int], limit: int) -> Optional[list[int]]:
        """Minimum separator of ``G[comp]`` avoiding ``fixed``, if <= limit."""
        if len(comp) <= self.p:
            return []
        key = (comp, fixed & comp)
        lb, sol = self.memo.get(key, (None, None))
        if sol is not None:
            return sol if len(sol) <= limit else None
        if lb is None:
            lb = self.lower_bound(comp)
        for budget in range(lb, limit + 1):
            sol = self._reduce(comp, key[1], budget)
            if sol is not None:
                self.memo[key] = (budget, sol)
                return sol
            self.memo[key] = (budget + 1, None)
        return None

    def _parts(self, comp: frozenset[int], fixed: frozenset[int], taken: list[int],
               budget: int) -> Optional[list[int]]:
        # delete ``taken`` from ``comp`` and solve what is left piece by piece
        g, p = self.g, self.p
        parts = [c for c in components_within(g, comp - set(taken)) if len(c) > p]
        bounds = [self.lower_bound(c) for c in parts]
        remaining = budget - len(taken)
        found = list(taken)
        for i, part in enumerate(parts):
            res = self.solve(part, fixed, remaining - sum(bounds[i + 1:]))
            if res is None:
                return None
            found.extend(res)
            remaining -= len(res)
        return found

    def _reduce(self, comp: frozenset[int], fixed: frozenset[int], budget: int) -> Optional[list[int]]:
        # A fixed block above p vertices is hopeless; one of exactly p
        # vertices forces all of its neighbors into the separator.
        g, p = self.g, self.p
        forced: set[int] = set()
        for block in components_within(g, fixed):
            if len(block) > p:
                return None
            if len(block) == p:
                forced.update(w for v in block for w in g.adj[v] if w in comp and w not in block)
        if forced:
            if len(forced) > budget:
                return None
            return self._parts(comp, fixed, sorted(forced), budget)
        return self._branch(comp, fixed, budget)

    def _branch(self, comp: frozenset[int], fixed: frozenset[int], budget: int) -> Optional[list[int]]:
        if budget <= 0:
            return None
        sub = _pick_subgraph(self.g, self.p, comp, fixed)
        tried: list[int] = []
        for v in sorted(x for x in sub if x not in fixed):
            found = self._parts(comp, fixed | frozenset(tried), [v], budget)
            if found is not None:
                return found
            tried.append(v)
        return None


def min_p_separator(g: Graph, p: int, cap: Optional[int] = None) -> Optional[OracleResult]:
    """Minimum p-size separator by branch-and-reduce, or None beyond ``cap``.

    Branches over the vertices of one connected ``(p+1)``-subgraph; components
    are solved separately, each by iterative deepening from a packing bound.
    """
    if p < 1:
        raise InputError(f"p must be >= 1, got {p}")
    cap = g.n if cap is None else cap
    search = _Search(g, p)
    chosen: list[int] = []
    for comp in components_within(g, g.vertices()):
        res = search.solve(comp, frozenset(), cap - len(chosen))
        if res is None:
            return None
        chosen.extend(res)
    return OracleResult(frozenset(chosen), len(chosen))


def connected_subsets(g: Graph, size: int) -> list[frozenset[int]]:
    """All vertex sets of exactly ``size`` vertices inducing connected subgraphs."""
    layer = {frozenset([v]) for v in g.vertices()}
    for _ in range(size - 1):
        nxt = set()
        for s in layer:
            for v in s:
                for w in g.adj[v]:
                    if w not in s:
                        nxt.add(s | {w})
        layer = nxt
    return sorted(layer, key=sorted)


def _combination_masks(n: int, k: int) -> np.ndarray:
    """Bitmasks of all k-subsets of ``range(n)``."""
    # masks[j][i] holds all i-subsets of range(j)
    prev = [np.zeros(1, dtype=np.uint32)] + [np.zeros(0, dtype=np.uint32)] * k
    for j in range(1, n + 1):
        bit = np.uint32(1 << (j - 1))
        cur = [prev[0]]
        for i in range(1, k + 1):
            cur.append(np.concatenate([prev[i], prev[i - 1] | bit]))
        prev = cur
    return prev[k]


def min_p_separator_exhaustive(g: Graph, p: int) -> OracleResult:
    """Smallest separator found by trying every subset in increasing size.

    Among the feasible subsets of minimum size the lexicographically smallest
    (as a sorted vertex list) is returned. Limited to 25 vertices.
    """
    if g.n > EXHAUSTIVE_MAX_N:
        raise InputError(f"exhaustive search is limited to {EXHAUSTIVE_MAX_N} vertices, got {g.n}")
    if p < 1:
        raise InputError(f"p must be >= 1, got {p}")
    # G - D has a component above p iff it keeps some connected (p+1)-set
    targets = np.array([sum(1 << v for v in s) for s in connected_subsets(g, p + 1)],
                       dtype=np.uint32)
    for size in range(g.n + 1):
        masks = _combination_masks(g.n, size)
        # compacting the array is the slow part, so test targets in blocks
        for start in range(0, len(targets), 8):
            keep = np.ones(masks.shape, dtype=bool)
            for t in targets[start:start + 8]:
                keep &= (masks & t) != 0
            masks = masks[keep]
            if masks.size == 0:
                break
        if masks.size:
            cands = [sorted(v for v in range(g.n) if int(m) >> v & 1) for m in masks]
            best = min(cands)
            assert is_p_size_separator(g, best, p)
            return OracleResult(frozenset(best), size)
    raise AssertionError("the full vertex set is always a separator")
