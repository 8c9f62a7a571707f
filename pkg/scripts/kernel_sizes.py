"""Kernel size sweep over random graphs.

For each (p, edge probability) cell, kernelizes a batch of G(n, prob) graphs
in both modes and reports mean kernel size, forced-vertex count and, on graphs
small enough for the exact oracle, the ratio of kernel size to gamma.

    python3 scripts/kernel_sizes.py --graphs 50 --n 30 --csv sizes.csv
"""

from __future__ import annotations

import argparse
import csv
import logging
import random
import statistics
import sys
from dataclasses import asdict, dataclass, field

from psep.generators import random_gnp
from psep.kernel import kernelize, kernelize_quadratic
from psep.oracle import min_p_separator

log = logging.getLogger("kernel_sizes")


@dataclass
class SweepConfig:
    graphs: int = 40
    n: int = 30
    ps: list[int] = field(default_factory=lambda: [1, 2, 3])
    probs: list[float] = field(default_factory=lambda: [0.05, 0.1, 0.2, 0.3])
    seed: int = 1
    oracle_max_n: int = 30


@dataclass
class Row:
    p: int
    prob: float
    graphs: int
    linear_kernel: float
    linear_forced: float
    quadratic_kernel: float
    quadratic_forced: float
    mean_gamma: float | None
    linear_per_gamma: float | None  # kernel size / gamma(kernel), worst case


def sweep(cfg: SweepConfig) -> list[Row]:
    rng = random.Random(cfg.seed)
    rows = []
    for p in cfg.ps:
        for prob in cfg.probs:
            lin_n, lin_c, quad_n, quad_c, gammas, ratios = [], [], [], [], [], []
            for _ in range(cfg.graphs):
                g = random_gnp(cfg.n, prob, rng)
                lin = kernelize(g, p)
                quad = kernelize_quadratic(g, p)
                lin_n.append(lin.kernel_graph.n)
                lin_c.append(lin.budget_used)
                quad_n.append(quad.kernel_graph.n)
                quad_c.append(quad.budget_used)
                if g.n <= cfg.oracle_max_n:
                    gammas.append(min_p_separator(g, p).size)
                    kg = min_p_separator(lin.kernel_graph, p).size
                    if kg:
                        ratios.append(lin.kernel_graph.n / kg)
            rows.append(Row(
                p=p, prob=prob, graphs=cfg.graphs,
                linear_kernel=statistics.fmean(lin_n),
                linear_forced=statistics.fmean(lin_c),
                quadratic_kernel=statistics.fmean(quad_n),
                quadratic_forced=statistics.fmean(quad_c),
                mean_gamma=statistics.fmean(gammas) if gammas else None,
                linear_per_gamma=max(ratios) if ratios else None,
            ))
            log.info("p=%d prob=%.2f done", p, prob)
    return rows


def print_table(rows: list[Row], n: int) -> None:
    print(f"n = {n}")
    print(f"{'p':>2} {'prob':>5} {'lin |J|':>8} {'lin |C|':>8} {'quad |J|':>9} "
          f"{'quad |C|':>9} {'gamma':>6} {'max |J|/gamma(J)':>17} {'9p':>4}")
    for r in rows:
        gam = "-" if r.mean_gamma is None else f"{r.mean_gamma:.1f}"
        ratio = "-" if r.linear_per_gamma is None else f"{r.linear_per_gamma:.2f}"
        print(f"{r.p:>2} {r.prob:>5.2f} {r.linear_kernel:>8.1f} {r.linear_forced:>8.1f} "
              f"{r.quadratic_kernel:>9.1f} {r.quadratic_forced:>9.1f} {gam:>6} {ratio:>17} {9 * r.p:>4}")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    defaults = SweepConfig()
    parser.add_argument("--graphs", type=int, default=defaults.graphs)
    parser.add_argument("--n", type=int, default=defaults.n)
    parser.add_argument("--ps", type=int, nargs="+", default=defaults.ps)
    parser.add_argument("--probs", type=float, nargs="+", default=defaults.probs)
    parser.add_argument("--seed", type=int, default=defaults.seed)
    parser.add_argument("--oracle-max-n", type=int, default=defaults.oracle_max_n,
                        help="skip the exact oracle above this many vertices")
    parser.add_argument("--csv", default=None, help="also write rows to this CSV file")
    parser.add_argument("-v", "--verbose", action="store_true")
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    cfg = SweepConfig(args.graphs, args.n, args.ps, args.probs, args.seed, args.oracle_max_n)
    rows = sweep(cfg)
    print_table(rows, cfg.n)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=list(asdict(rows[0])))
            writer.writeheader()
            writer.writerows(asdict(r) for r in rows)
    return 0


if __name__ == "__main__":
    sys.exit(main())
