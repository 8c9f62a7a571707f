"""Deterministic instance generators."""

from __future__ import annotations

import itertools
import random

from .errors import InputError
from .graph import Graph


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def grid(rows: int, cols: int) -> Graph:
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph.from_edges(rows * cols, edges)


def spider(legs: int, length: int) -> Graph:
    """Center 0 with ``legs`` paths of ``length`` vertices hanging off it."""
    edges = []
    n = 1
    for _ in range(legs):
        prev = 0
        for _ in range(length):
            edges.append((prev, n))
            prev = n
            n += 1
    return Graph.from_edges(n, edges)


def random_gnm(n: int, m: int, seed: int) -> Graph:
    """Uniform graph with exactly ``m`` edges."""
    pairs = list(itertools.combinations(range(n), 2))
    if m > len(pairs):
        raise InputError(f"{n} vertices allow at most {len(pairs)} edges, asked for {m}")
    return Graph.from_edges(n, random.Random(seed).sample(pairs, m))


def random_gnp(n: int, prob: float, rng: random.Random) -> Graph:
    return Graph.from_edges(
        n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < prob])


def random_regular(n: int, d: int, rng: random.Random, tries: int = 2000) -> Graph:
    """Random d-regular simple graph by repeated pairing; expander-like for d >= 3."""
    if n * d % 2 or d >= n:
        raise InputError(f"no {d}-regular graph on {n} vertices")
    for _ in range(tries):
        stubs = [v for v in range(n) for _ in range(d)]
        rng.shuffle(stubs)
        edges = list(zip(stubs[::2], stubs[1::2]))
        if all(u != v for u, v in edges) and len({frozenset(e) for e in edges}) == len(edges):
            return Graph.from_edges(n, edges)
    raise InputError(f"could not sample a simple {d}-regular graph on {n} vertices")
