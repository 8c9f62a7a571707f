"""Iteration counts of the linear-kernel loop on structured and random graphs.

Reports, per graph family, how often the split step and the crown/replace
step run, how many crown eliminations happen, and how often the star witness
of a single-base had to be repaired. Runs with the debug invariant checks on.

    python3 scripts/scc_stats.py --seeds 20
"""

from __future__ import annotations

import argparse
import random
import sys
from collections import defaultdict
from dataclasses import dataclass

from psep.generators import cycle, grid, random_gnp, random_regular, spider
from psep.graph import Graph, connected_components, induced_subgraph
from psep.kernel import scc


@dataclass
class StatsConfig:
    seeds: int = 10
    ps: tuple[int, ...] = (1, 2, 3)
    debug: bool = True


def families(seed: int) -> dict[str, Graph]:
    rng = random.Random(seed)
    hub_edges = []
    # a few hubs with many pendant paths, joined by a sparse random core
    hubs = list(range(4))
    n = len(hubs)
    for h in hubs:
        for _ in range(rng.randint(6, 14)):
            hub_edges.append((h, n))
            if rng.random() < 0.5:
                hub_edges.append((n, n + 1))
                n += 1
            n += 1
    hub_edges += [(a, b) for a in hubs for b in hubs if a < b and rng.random() < 0.6]
    return {
        "gnp(40, 0.08)": random_gnp(40, 0.08, rng),
        "gnp(40, 0.2)": random_gnp(40, 0.2, rng),
        "3-regular(40)": random_regular(40, 3, rng),
        "grid(6x7)": grid(6, 7),
        "cycle(40)": cycle(40),
        "spider(10, 4)": spider(10, 4),
        "hubs": Graph.from_edges(n, hub_edges),
    }


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seeds", type=int, default=StatsConfig.seeds)
    parser.add_argument("--ps", type=int, nargs="+", default=list(StatsConfig.ps))
    parser.add_argument("--no-debug", action="store_true", help="skip the invariant checks")
    args = parser.parse_args(argv)
    cfg = StatsConfig(args.seeds, tuple(args.ps), not args.no_debug)

    totals: dict[tuple[str, int], dict[str, int]] = defaultdict(lambda: defaultdict(int))
    for seed in range(cfg.seeds):
        for name, g in families(seed).items():
            for p in cfg.ps:
                row = totals[(name, p)]
                for comp in connected_components(g):
                    if len(comp) <= p:
                        continue
                    sub, _ = induced_subgraph(g, comp)
                    res = scc(sub, p, debug=cfg.debug)
                    row["runs"] += 1
                    row["n"] += sub.n
                    row["kernel"] += len(res.decomposition.j_set)
                    row["forced"] += len(res.decomposition.c_set)
                    row["split"] += res.step3
                    row["crown"] += res.step45
                    row["elim"] += res.crown_rounds
                    row["repairs"] += res.witness_repairs
    print(f"{'family':<16} {'p':>2} {'runs':>5} {'mean n':>7} {'mean |J|':>9} {'mean |C|':>9} "
          f"{'split':>6} {'crown':>6} {'elim':>6} {'repairs':>8}")
    for (name, p), row in sorted(totals.items()):
        runs = max(row["runs"], 1)
        print(f"{name:<16} {p:>2} {row['runs']:>5} {row['n'] / runs:>7.1f} "
              f"{row['kernel'] / runs:>9.1f} {row['forced'] / runs:>9.1f} "
              f"{row['split']:>6} {row['crown']:>6} {row['elim']:>6} {row['repairs']:>8}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
