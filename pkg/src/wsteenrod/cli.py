"""Command line interface.

Subcommands: ``algebra`` (element arithmetic), ``resolve`` (minimal
resolutions to chart files), ``verify`` (the check suites, exit code 0 iff
everything passes), ``chart`` (chart file to SVG/TSV).  Window flags
default to max-stem 24 / max-filt 16; the WSTEENROD_MAX_STEM environment
variable overrides the default window.  Identical flags produce identical
bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .charts import ChartFormatError, chart_file_dumps, chart_file_loads
from .grammar import (
    GrammarError,
    format_dual,
    format_monomial_dual,
    format_monomial_steenrod,
    format_steenrod,
    parse_dual,
    parse_steenrod,
)
from .milnor import BiDegree, MilnorAlgebra, WindowError, bidegree_basis
from .modules import ExteriorProfile, InvariantViolation, quotient_by_exterior, TrivialModule
from .resolution import PartialResultError, minimal_resolution
from .svg import render_chart_svg
from .verify import SUITES, VerifyConfig, run_suites


def _default_max_stem() -> int:
    env = os.environ.get("WSTEENROD_MAX_STEM")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise SystemExit(f"WSTEENROD_MAX_STEM must be an integer, got {env!r}")
    return 24


def _add_window_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-stem", type=int, default=None, help="stem window (default 24)")
    p.add_argument("--max-filt", type=int, default=16, help="filtration bound (default 16)")
    p.add_argument("--threads", type=int, default=1, help="worker threads; never changes results")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wsteenrod",
        description="exact motivic mod-2 Steenrod algebra computations (tau = 0)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    alg = sub.add_parser("algebra", help="element arithmetic in the Milnor basis")
    _add_window_flags(alg)
    algsub = alg.add_subparsers(dest="subcommand", required=True)

    p_basis = algsub.add_parser("basis", help="print the basis of one bidegree")
    p_basis.add_argument("--stem", type=int, required=True)
    p_basis.add_argument("--weight", type=int, required=True)
    p_basis.add_argument("--dual", action="store_true", help="print dual monomials instead")

    p_mul = algsub.add_parser("mul", help="product of two operations")
    p_mul.add_argument("a")
    p_mul.add_argument("b")

    p_anti = algsub.add_parser("antipode", help="antipode of a dual element")
    p_anti.add_argument("x")

    p_conj = algsub.add_parser("conjugate", help="conjugate of an operation")
    p_conj.add_argument("a")

    p_pst = algsub.add_parser("pst", help="the operation dual to xi_t^(2^s)")
    p_pst.add_argument("--s", type=int, default=0)
    p_pst.add_argument("--t", type=int, required=True)

    p_pair = algsub.add_parser("pair", help="pairing of an operation with a dual element")
    p_pair.add_argument("a")
    p_pair.add_argument("x")

    res = sub.add_parser("resolve", help="minimal resolution to a chart file")
    _add_window_flags(res)
    res.add_argument(
        "--module",
        required=True,
        help="sphere | kw:N | wbp | wbp:N",
    )
    res.add_argument("--out", default=None, help="output chart JSON path (default stdout)")
    res.add_argument(
        "--max-gens",
        type=int,
        default=None,
        help="resource bound per bidegree; exceeding it yields a flagged partial file",
    )

    ver = sub.add_parser("verify", help="run verification suites")
    _add_window_flags(ver)
    ver.add_argument(
        "--suite",
        default="all",
        help="|".join(sorted(SUITES)) + "|all (comma separated)",
    )
    ver.add_argument("--out", default=None, help="write the JSON report here")

    cha = sub.add_parser("chart", help="render a chart file")
    cha.add_argument("--in", dest="infile", required=True)
    cha.add_argument("--svg", default=None)
    cha.add_argument("--tsv", default=None)
    cha.add_argument("--json", dest="json_out", default=None, help="re-serialize for round trips")
    return parser


def _resolve_module(name: str, algebra: MilnorAlgebra, chart_stem: int):
    if name == "sphere":
        return TrivialModule(algebra), "sphere"
    if name == "wbp":
        ts = ExteriorProfile.cofinite().resolve(chart_stem)
        return quotient_by_exterior(ExteriorProfile.of(*ts), algebra), "wbp"
    if name.startswith("kw:"):
        n = int(name.split(":", 1)[1])
        if n < 0:
            raise SystemExit(f"bad module {name!r}")
        return quotient_by_exterior(ExteriorProfile.of(n + 1), algebra), f"kw:{n}"
    if name.startswith("wbp:"):
        n = int(name.split(":", 1)[1])
        if n < 0:
            raise SystemExit(f"bad module {name!r}")
        ts = tuple(range(1, n + 2))
        return quotient_by_exterior(ExteriorProfile.of(*ts), algebra), f"wbp:{n}"
    raise SystemExit(f"unknown module {name!r}; use sphere, kw:N, wbp or wbp:N")


def _write(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_algebra(args) -> int:
    max_stem = args.max_stem if args.max_stem is not None else _default_max_stem()
    alg = MilnorAlgebra(max_stem)
    if args.subcommand == "basis":
        d = BiDegree(args.stem, args.weight)
        alg.require(d)
        fmt = format_monomial_dual if args.dual else format_monomial_steenrod
        for m in bidegree_basis(d):
            print(fmt(m))
        return 0
    if args.subcommand == "mul":
        a = parse_steenrod(args.a, alg)
        b = parse_steenrod(args.b, alg)
        print(format_steenrod(alg.product(a, b)))
        return 0
    if args.subcommand == "antipode":
        x = parse_dual(args.x, alg)
        print(format_dual(alg.antipode_dual(x)))
        return 0
    if args.subcommand == "conjugate":
        a = parse_steenrod(args.a, alg)
        print(format_steenrod(alg.conjugate(a)))
        return 0
    if args.subcommand == "pst":
        el = alg.pst(args.s, args.t)
        print(format_steenrod(el))
        return 0
    if args.subcommand == "pair":
        a = parse_steenrod(args.a, alg)
        x = parse_dual(args.x, alg)
        print(alg.pair(a, x))
        return 0
    raise SystemExit(f"unknown algebra subcommand {args.subcommand!r}")


def cmd_resolve(args) -> int:
    max_stem = args.max_stem if args.max_stem is not None else _default_max_stem()
    alg = MilnorAlgebra(max_stem + 2)
    module, name = _resolve_module(args.module, alg, max_stem)
    try:
        _, chart = minimal_resolution(
            module,
            max_stem,
            args.max_filt,
            max_gens_per_bidegree=args.max_gens,
            threads=args.threads,
        )
        chart.module = name
        _write(args.out, chart_file_dumps(chart))
    except PartialResultError as exc:
        exc.chart.module = name
        _write(args.out, chart_file_dumps(exc.chart, partial=True, completed_stem=exc.completed_stem))
        print(f"warning: {exc}", file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    max_stem = args.max_stem if args.max_stem is not None else _default_max_stem()
    config = VerifyConfig(max_stem=max_stem, max_filt=args.max_filt, threads=args.threads)
    names = [s.strip() for s in args.suite.split(",") if s.strip()]
    try:
        reports, ok = run_suites(names, config)
    except ValueError as exc:
        raise SystemExit(str(exc))
    payload = {
        "max_stem": max_stem,
        "suites": names,
        "verdict": "pass" if ok else "fail",
        "reports": [r.to_json() for r in reports],
    }
    text = json.dumps(payload, indent=2) + "\n"
    if args.out:
        _write(args.out, text)
    for r in reports:
        status = "pass" if r.verdict else "FAIL"
        print(f"[{status}] {r.check} {json.dumps(r.params, sort_keys=True, default=str)}")
    if not ok:
        print("verdict: fail")
        return 1
    print("verdict: pass")
    return 0


def cmd_chart(args) -> int:
    try:
        with open(args.infile, encoding="utf-8") as fh:
            chart = chart_file_loads(fh.read())
    except FileNotFoundError:
        raise SystemExit(f"no such file: {args.infile}")
    except ChartFormatError as exc:
        raise SystemExit(f"bad chart file: {exc}")
    wrote = False
    if args.svg:
        _write(args.svg, render_chart_svg(chart))
        wrote = True
    if args.tsv:
        _write(args.tsv, chart.to_tsv())
        wrote = True
    if args.json_out:
        _write(args.json_out, chart_file_dumps(chart))
        wrote = True
    if not wrote:
        sys.stdout.write(chart.to_tsv())
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "algebra":
            return cmd_algebra(args)
        if args.command == "resolve":
            return cmd_resolve(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "chart":
            return cmd_chart(args)
    except GrammarError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except WindowError as exc:
        print(f"window error: {exc}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 1
    raise SystemExit(f"unknown command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
