"""Command line front end.

Subcommands compute invariants of a PD-coded diagram (conway, a2, lk),
evaluate the torus-link recurrence and the knot-family product (torus,
kn), or run the full verification harness (verify).  Results go to
stdout, diagnostics to stderr.  Exit codes: 0 success / all checks
passed, 1 failed verification or exhausted node budget, 2 usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .diagram import components, linking_number, parse_pd, pd_text
from .poly import format_poly
from .skein import NodeBudgetExceeded, SkeinContext, a2, conway, conway_Kn, conway_torus2
from .table import TableError
from .verify import VerifyConfig, run_all


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conwaykit",
        description="Conway polynomials of oriented link diagrams, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser):
        p.add_argument(
            "--format", choices=("text", "json"), default="text", help="output format"
        )
        p.add_argument(
            "--verbose", action="store_true", help="engine statistics on stderr"
        )

    def add_diagram_command(name: str, summary: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=summary)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--pd", help="PD code, e.g. 'X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)'")
        src.add_argument("--file", help="file containing a PD code")
        p.add_argument(
            "--budget", type=int, default=None, help="node budget for the skein search"
        )
        add_common(p)
        return p

    add_diagram_command("conway", "Conway polynomial of a diagram")
    add_diagram_command("a2", "z^2 coefficient of a knot diagram")
    add_diagram_command("lk", "pairwise linking numbers of a link diagram")

    p = sub.add_parser("torus", help="Conway polynomial of the (2, m) torus link")
    p.add_argument("--m", type=int, required=True)
    add_common(p)

    p = sub.add_parser("kn", help="Conway polynomial of the n-th twisted knot product")
    p.add_argument("--n", type=int, required=True)
    add_common(p)

    p = sub.add_parser("verify", help="run every verification check")
    p.add_argument("--max-n", type=int, default=50, dest="max_n")
    p.add_argument("--max-l", type=int, default=50, dest="max_l")
    p.add_argument("--max-r", type=int, default=50, dest="max_r")
    add_common(p)

    return parser


def _load_pd(args: argparse.Namespace) -> str:
    if args.pd is not None:
        return args.pd
    try:
        with open(args.file, encoding="utf-8") as fh:
            return fh.read().strip()
    except OSError as exc:
        raise ValueError(f"cannot read {args.file}: {exc}") from exc


def _emit(args: argparse.Namespace, input_text: str, result) -> None:
    if args.format == "json":
        print(json.dumps({"command": args.command, "input": input_text, "result": result}))
    elif isinstance(result, dict):
        for key, value in result.items():
            print(f"{key} = {value}")
    else:
        print(result)


def _run_diagram_command(args: argparse.Namespace) -> int:
    pd = _load_pd(args)
    d = parse_pd(pd)
    ctx = SkeinContext()
    if args.budget is not None:
        ctx.node_budget = args.budget
    if args.command == "conway":
        result = format_poly(conway(d, ctx))
    elif args.command == "a2":
        result = a2(d, ctx)
    else:
        comps = components(d)
        result = {
            f"lk({i},{j})": linking_number(d, i, j)
            for i in range(len(comps))
            for j in range(i + 1, len(comps))
        }
        if not result:
            print("diagram has a single component; no pairs", file=sys.stderr)
    _emit(args, pd_text(d), result)
    if args.verbose:
        print(
            f"nodes expanded: {ctx.nodes_expanded}, cache hits: {ctx.cache_hits}",
            file=sys.stderr,
        )
    return 0


def _run_verify(args: argparse.Namespace) -> int:
    config = VerifyConfig(max_n=args.max_n, max_l=args.max_l, max_r=args.max_r)
    reports = run_all(config)
    failed = [r for r in reports if not r.passed]
    if args.format == "json":
        for r in reports:
            print(
                json.dumps(
                    {
                        "check_name": r.check_name,
                        "inputs": r.inputs,
                        "expected": r.expected,
                        "computed": r.computed,
                        "passed": r.passed,
                    }
                )
            )
    else:
        for r in reports:
            if r.passed:
                print(f"PASS {r.check_name}: {r.computed}")
            else:
                print(
                    f"FAIL {r.check_name}: expected {r.expected}; computed {r.computed}"
                )
        if failed:
            print(f"{len(failed)} OF {len(reports)} CHECKS FAILED")
        else:
            print("ALL CHECKS PASSED")
    if args.verbose:
        print(f"{len(reports)} checks, {len(failed)} failed", file=sys.stderr)
    return 1 if failed else 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help, 2 for usage errors
        return int(exc.code or 0)

    try:
        if args.command in ("conway", "a2", "lk"):
            return _run_diagram_command(args)
        if args.command == "torus":
            result = format_poly(conway_torus2(args.m))
            _emit(args, str(args.m), result)
            return 0
        if args.command == "kn":
            result = format_poly(conway_Kn(args.n))
            _emit(args, str(args.n), result)
            return 0
        return _run_verify(args)
    except NodeBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, TableError) as exc:
        # covers PD and polynomial syntax errors, bad table files, bad indices
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
