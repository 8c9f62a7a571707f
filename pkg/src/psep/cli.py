"""Command-line interface: ``psep kernelize|solve|verify|gen``.

Exit codes: 0 reduced / valid, 1 no-instance / invalid witness, 2 input
error, 3 kernel too large for the exact solver.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

from . import generators
from .crown import crown_violations
from .errors import InputError
from .instance import (CROWN, format_crown_witness, format_instance,
                       format_separator_witness, parse_witness, read_instance,
                       write_text)
from .kernel import LINEAR, NO_INSTANCE, QUADRATIC, kernelize, kernelize_quadratic
from .oracle import is_p_size_separator, min_p_separator

EXIT_OK = 0
EXIT_NO = 1
EXIT_INPUT = 2
EXIT_CAPACITY = 3

ORACLE_MAX_N = 60


def _emit_report(report: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(report, sort_keys=True) + "\n")
        return
    for key, value in report.items():
        if isinstance(value, list):
            value = " ".join(str(x) for x in value)
        elif isinstance(value, dict):
            for sub, v in value.items():
                out.write(f"{key}.{sub}: {v}\n")
            continue
        elif value is None:
            value = "-"
        out.write(f"{key}: {value}".rstrip() + "\n")


def cmd_kernelize(args, out) -> int:
    start = time.perf_counter()
    inst = read_instance(args.input)
    run = kernelize if args.mode == LINEAR else kernelize_quadratic
    res = run(inst.graph, args.p, args.k)
    kernel_labels = [inst.labels[v] for v in res.kernel_ids]
    if args.out:
        write_text(args.out, format_instance(res.kernel_graph, kernel_labels), out)
    if args.emit_witness and res.decomposition is not None:
        write_text(args.emit_witness, format_crown_witness(res.decomposition, inst.labels), out)
    report = {
        "mode": res.mode,
        "p": args.p,
        "k": args.k,
        "verdict": res.verdict,
        "forced": [inst.labels[v] for v in sorted(res.forced)],
        "budget_used": res.budget_used,
        "kernel_n": res.kernel_graph.n,
        "kernel_m": res.kernel_graph.m,
        "bound": res.bound,
        "stats": res.stats,
    }
    if args.timing:
        report["wall_time"] = round(time.perf_counter() - start, 6)
    _emit_report(report, args.format, out)
    return EXIT_NO if res.verdict == NO_INSTANCE else EXIT_OK


def cmd_solve(args, out) -> int:
    start = time.perf_counter()
    inst = read_instance(args.input)
    g = inst.graph
    res = kernelize(g, args.p, args.k)
    report = {"mode": "solve", "p": args.p, "k": args.k, "kernel_n": res.kernel_graph.n}
    if res.verdict == NO_INSTANCE:
        report.update(verdict=NO_INSTANCE, size=None, separator=[])
        _emit_report(report, args.format, out)
        return EXIT_NO
    if res.kernel_graph.n > ORACLE_MAX_N:
        print(f"error: kernel exceeds oracle capacity ({res.kernel_graph.n} > {ORACLE_MAX_N} vertices)",
              file=sys.stderr)
        return EXIT_CAPACITY
    exact = min_p_separator(res.kernel_graph, args.p)
    sep = set(res.forced) | {res.kernel_ids[v] for v in exact.separator}
    if not is_p_size_separator(g, sep, args.p):
        raise AssertionError("assembled separator is not a p-size separator")
    verdict = NO_INSTANCE if args.k is not None and len(sep) > args.k else "solved"
    report.update(verdict=verdict, size=len(sep),
                  separator=[inst.labels[v] for v in sorted(sep)])
    if args.out:
        write_text(args.out, format_separator_witness(sep, inst.labels), out)
    if args.timing:
        report["wall_time"] = round(time.perf_counter() - start, 6)
    _emit_report(report, args.format, out)
    return EXIT_NO if verdict == NO_INSTANCE else EXIT_OK


def cmd_verify(args, out) -> int:
    inst = read_instance(args.input)
    with open(args.witness) as fh:
        wit = parse_witness(fh.read(), inst, args.p)
    if wit.kind == CROWN:
        problems = crown_violations(inst.graph, wit.decomposition)
    else:
        problems = []
        if not is_p_size_separator(inst.graph, wit.separator, args.p):
            problems.append(f"removing the {len(wit.separator)} listed vertices leaves a "
                            f"component larger than p={args.p}")
    for msg in problems:
        out.write(f"violation: {msg}\n")
    out.write(f"{wit.kind}: {'valid' if not problems else 'invalid'}\n")
    return EXIT_OK if not problems else EXIT_NO


def cmd_gen(args, out) -> int:
    def need(*names):
        for name in names:
            if getattr(args, name) is None:
                raise InputError(f"gen {args.kind} requires --{name}")
            if getattr(args, name) < 0:
                raise InputError(f"--{name} must be non-negative")

    if args.kind == "path":
        need("n")
        g = generators.path(args.n)
    elif args.kind == "cycle":
        need("n")
        g = generators.cycle(args.n)
    elif args.kind == "grid":
        need("rows", "cols")
        g = generators.grid(args.rows, args.cols)
    elif args.kind == "spider":
        need("legs", "len")
        g = generators.spider(args.legs, args.len)
    else:
        need("n", "m", "seed")
        g = generators.random_gnm(args.n, args.m, args.seed)
    params = " ".join(f"{k}={getattr(args, k)}" for k in ("n", "m", "rows", "cols", "legs", "len", "seed")
                      if getattr(args, k) is not None)
    write_text(args.out, format_instance(g, comment=f"gen {args.kind} {params}"), out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="psep", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, witness_help: str):
        sp.add_argument("input", help="instance file")
        sp.add_argument("--p", type=int, required=True, help="maximum component size")
        sp.add_argument("--k", type=int, default=None, help="solution budget")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--timing", action="store_true", help="add wall time to the report")
        sp.add_argument("--out", default=None, help=witness_help)

    kz = sub.add_parser("kernelize", help="reduce an instance to a kernel")
    common(kz, "write the kernel instance here ('-' for stdout)")
    kz.add_argument("--mode", choices=(LINEAR, QUADRATIC), default=LINEAR)
    kz.add_argument("--emit-witness", default=None, help="write the crown decomposition here")
    kz.set_defaults(func=cmd_kernelize)

    sv = sub.add_parser("solve", help="kernelize, then solve the kernel exactly")
    common(sv, "write the separator witness here")
    sv.set_defaults(func=cmd_solve)

    vf = sub.add_parser("verify", help="check a separator or crown witness")
    vf.add_argument("input")
    vf.add_argument("witness")
    vf.add_argument("--p", type=int, required=True)
    vf.set_defaults(func=cmd_verify)

    gn = sub.add_parser("gen", help="generate an instance")
    gn.add_argument("kind", choices=("path", "cycle", "grid", "random", "spider"))
    for name in ("n", "m", "rows", "cols", "legs", "len", "seed"):
        gn.add_argument(f"--{name}", type=int, default=None)
    gn.add_argument("--out", default="-")
    gn.set_defaults(func=cmd_gen)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if getattr(args, "p", 1) < 1:
        print(f"error: p must be >= 1, got {args.p}", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args, out)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
