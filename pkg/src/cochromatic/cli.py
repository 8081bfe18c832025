"""Command line front end.

Exit codes: 0 success, 1 the mathematics says no (verification failed or a
violation was found), 2 usage error, 3 I/O, parse or budget error.

A JSON config file given with ``--config`` supplies per-subcommand defaults,
e.g. ``{"search": {"n": 4, "f": 1, "workers": 4}}``; flags on the command
line win.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import bounds, construction, experiments
from .graph import complement, members
from .io import FormatError, read_graph, write_dimacs, write_graph6
from .solvers import (
    Budget,
    chromatic_number,
    clique_number,
    cochromatic_number,
    independence_number,
    verify_coloring,
    verify_homogeneous_partition,
)

OK, MATH_NO, USAGE, IO_ERROR = 0, 1, 2, 3


def _read_input(path: str | None) -> bytes:
    if path is None or path == "-":
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def _write(path: str | None, data: str | bytes) -> None:
    if isinstance(data, str):
        data = data.encode()
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        Path(path).write_bytes(data)


def _emit_graph(g, fmt: str) -> bytes:
    if fmt == "graph6":
        return write_graph6(g) + b"\n"
    return write_dimacs(g).encode()


# ---------------------------------------------------------------- commands

def cmd_solve(args) -> int:
    try:
        g = read_graph(_read_input(args.input), args.format)
    except (FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return IO_ERROR
    budget = Budget(time_ms=args.budget_ms) if args.budget_ms else None
    solver = {"chi": chromatic_number, "zeta": cochromatic_number,
              "omega": clique_number, "alpha": independence_number}[args.invariant]
    res = solver(g, budget)
    witness_text = None
    if args.invariant == "chi":
        assert verify_coloring(g, res.witness), "solver witness failed verification"
        witness_text = " ".join(map(str, res.witness.assignment))
    elif args.invariant == "zeta":
        assert verify_homogeneous_partition(g, res.witness), "solver witness failed verification"
        witness_text = "; ".join(f"{kind}:{','.join(map(str, members(m)))}" for m, kind in res.witness.classes)
    else:
        host = g if args.invariant == "omega" else complement(g)
        assert host.is_clique(res.witness), "solver witness failed verification"
        witness_text = " ".join(map(str, members(res.witness)))
    if not res.exact:
        print(f"{args.invariant} in [{res.lower}, {res.upper}] (budget exceeded)")
        if args.witness:
            print(f"witness: {witness_text}")
        return IO_ERROR
    print(res.value)
    if args.witness:
        print(f"witness: {witness_text}")
    return OK


def cmd_convert(args) -> int:
    try:
        g = read_graph(_read_input(args.input), args.source)
    except (FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return IO_ERROR
    _write(args.output, _emit_graph(g, args.to))
    return OK


def _spec_from_args(args) -> construction.ConstructionSpec:
    h = construction.build_H()
    family = construction.enumerate_X_family(h)
    pattern = [int(x) for x in str(args.multiplicities).split(",")]
    mult = [pattern[i % len(pattern)] for i in range(len(family))]
    return construction.ConstructionSpec.complete_family(h, mult)


def cmd_construct(args) -> int:
    if args.which == "H":
        g = construction.build_H().graph
    else:
        try:
            g = construction.build_G(_spec_from_args(args))
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return USAGE
    _write(args.output, _emit_graph(g, args.format))
    return OK


def cmd_verify(args) -> int:
    h = construction.build_H()
    report = construction.VerificationReport()
    if args.target == "lemma":
        props = [args.property] if args.property else [1, 2, 3]
        for p in props:
            if p == 1:
                report.checks.append(construction.verify_lemma_property1(h))
            elif p == 2:
                report.checks.append(construction.verify_lemma_property2(h))
            else:
                check = construction.verify_lemma_property3(h, colors=args.colors, node_limit=args.node_limit)
                report.checks.append(check)
    elif args.target == "observation2":
        report.checks.append(construction.verify_observation2())
    else:
        try:
            spec = _spec_from_args(args)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return USAGE
        report = construction.verify_theorem3(construction.build_G(spec), spec)
    print(report.to_text())
    if args.report_path:
        Path(args.report_path).write_text(report.to_json() + "\n")
    if any(c.status == "budget" for c in report.checks):
        return IO_ERROR
    return OK if report.passed else MATH_NO


def cmd_search(args) -> int:
    try:
        if args.input is None or args.input == "-":
            lines = sys.stdin.buffer.read().splitlines()
        else:
            lines = Path(args.input).read_bytes().splitlines()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return IO_ERROR
    report = bounds.batch_check(lines, args.n, args.f, args.budget_ms, args.workers)
    print(report.to_text())
    if args.report_path:
        Path(args.report_path).write_text(report.to_json() + "\n")
    if args.violations_path:
        Path(args.violations_path).write_text("".join(v.graph6 + "\n" for v in report.violations))
    if report.violations:
        return MATH_NO
    if report.timeouts or report.malformed:
        return IO_ERROR
    return OK


def cmd_experiment(args) -> int:
    thresholds = [int(t) for t in str(args.thresholds).split(",") if t]
    try:
        records = experiments.run_trials(args.n, args.trials, args.seed, args.budget_ms, args.workers)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    summary = experiments.summarize(records, thresholds)
    print(f"n={summary.n} trials={summary.trials} flagged={summary.flagged}")
    print(f"excess mean={summary.mean_excess} min={summary.min_excess} max={summary.max_excess}")
    print(f"mean chi={summary.mean_chi} mean zeta={summary.mean_zeta} n/(2 log2 n)={summary.band}")
    for t, p in summary.tails.items():
        print(f"P(excess >= {t}) = {p}")
    if args.csv_path:
        Path(args.csv_path).write_text(experiments.records_csv(records))
    if args.json_path:
        Path(args.json_path).write_text(experiments.records_json(records, summary) + "\n")
    return IO_ERROR if summary.flagged else OK


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cochromatic", description="Exact chromatic and cochromatic number tools.")
    parser.add_argument("--config", help="JSON file with per-subcommand defaults")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="exact chi, zeta, omega or alpha of one graph")
    p.add_argument("invariant", choices=["chi", "zeta", "omega", "alpha"])
    p.add_argument("input", nargs="?", help="graph file (default: stdin)")
    p.add_argument("--format", choices=["auto", "graph6", "dimacs"], default="auto")
    p.add_argument("--budget-ms", type=float)
    p.add_argument("--witness", action="store_true", help="also print the verified witness")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("convert", help="convert between graph6 and DIMACS")
    p.add_argument("input", nargs="?")
    p.add_argument("--from", dest="source", choices=["auto", "graph6", "dimacs"], default="auto")
    p.add_argument("--to", choices=["graph6", "dimacs"], required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("construct", help="emit the gadget H or a graph G of the family")
    p.add_argument("which", choices=["H", "G"])
    p.add_argument("--format", choices=["graph6", "dimacs"], default="graph6")
    p.add_argument("--multiplicities", default="1",
                   help="comma-separated pattern of |V_X|, repeated cyclically over the family (default 1)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="machine-check the lemma, observation or theorem")
    p.add_argument("target", choices=["lemma", "observation2", "theorem3"])
    p.add_argument("--property", type=int, choices=[1, 2, 3])
    p.add_argument("--colors", type=int, default=6, help="colour count for property 3")
    p.add_argument("--node-limit", type=int, help="enumeration node budget for property 3")
    p.add_argument("--multiplicities", default="1")
    p.add_argument("--report-path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="batch check chi <= zeta + f over a graph6 stream")
    p.add_argument("input", nargs="?", help="graph6 file, one graph per line (default: stdin)")
    p.add_argument("--n", type=int, required=True, help="clique bound: graphs with omega >= n are skipped")
    p.add_argument("--f", type=int, required=True)
    p.add_argument("--budget-ms", type=float)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--report-path")
    p.add_argument("--violations-path")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("experiment", help="Monte Carlo chi - zeta on G(n, 1/2)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget-ms", type=float)
    p.add_argument("--thresholds", default="1,2,3")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--csv-path")
    p.add_argument("--json-path")
    p.set_defaults(func=cmd_experiment)
    return parser


def _apply_config(parser: argparse.ArgumentParser, argv: list[str]) -> None:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    if not known.config:
        return
    config = json.loads(Path(known.config).read_text())
    subparsers = next(a for a in parser._actions if isinstance(a, argparse._SubParsersAction))
    for name, defaults in config.items():
        if name in subparsers.choices:
            subparsers.choices[name].set_defaults(**{k.replace("-", "_"): v for k, v in defaults.items()})
            # a config value satisfies a required flag
            for action in subparsers.choices[name]._actions:
                if action.dest in {k.replace("-", "_") for k in defaults}:
                    action.required = False


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        _apply_config(parser, argv)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: bad config: {exc}", file=sys.stderr)
        return IO_ERROR
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except BrokenPipeError:
        # downstream reader closed early (e.g. `| head`); silence the flush at exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return OK


if __name__ == "__main__":
    sys.exit(main())
