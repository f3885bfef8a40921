"""Command line interface.

Exit codes: 0 = all checks passed / search exhausted its budget,
1 = a violation (verify) or witness (search) was found,
2 = usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .cases import get_case, registry
from .errors import OpineqError
from .functions import parse_function, weierstrass_truncated
from .harness import (
    DEFAULT_DIMS,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    DEFAULT_TOLERANCE,
    CampaignConfig,
    counterexample_search,
    run_campaign,
)
from .norms import NORM_SWEEP


def _parse_int_list(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(",") if x)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from exc


def _parse_str_list(text: str) -> tuple:
    return tuple(x.strip() for x in text.split(",") if x.strip())


def _parse_params(pairs) -> dict:
    out = {}
    for pair in pairs or ():
        if "=" not in pair:
            raise argparse.ArgumentTypeError(f"--param expects name=value, got {pair!r}")
        name, _, value = pair.partition("=")
        try:
            out[name.strip()] = float(value)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"bad value in {pair!r}") from exc
    return out


def _parse_point(text: str) -> complex:
    try:
        return complex(text.replace("i", "j").replace(" ", ""))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad complex point {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opineq",
        description="Randomized verification of norm inequalities in matrix ideals.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list-cases", help="list registered inequality cases")

    ver = sub.add_parser("verify", help="run a verification campaign")
    ver.add_argument("--case", default="all",
                     help="case id, comma list of ids, or 'all'")
    ver.add_argument("--dims", type=_parse_int_list, default=DEFAULT_DIMS)
    ver.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    ver.add_argument("--norms", type=_parse_str_list,
                     default=tuple(s.id for s in NORM_SWEEP))
    ver.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ver.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE)
    ver.add_argument("--param", action="append", metavar="NAME=VALUE",
                     help="fix a scalar parameter (single case only); repeatable")
    ver.add_argument("--workers", type=int, default=1)
    ver.add_argument("--report", help="write the JSON report to this path")

    sea = sub.add_parser("search", help="search for a counterexample")
    sea.add_argument("--case", required=True)
    sea.add_argument("--param", action="append", metavar="NAME=VALUE")
    sea.add_argument("--budget", type=int, default=100000)
    sea.add_argument("--seed", type=int, default=7)
    sea.add_argument("--report", help="write the JSON report to this path")

    ev = sub.add_parser("eval", help="evaluate a catalog function")
    ev.add_argument("--function", required=True,
                    help="catalog id, e.g. cosh, sinh_over_z, cpr:r=0,theta=0")
    ev.add_argument("--point", type=_parse_point, required=True,
                    help="complex point, e.g. 1+0.5i")
    ev.add_argument("--truncate", type=int, default=100,
                    help="number of root factors (pairs when symmetric)")
    return parser


def _cmd_list_cases() -> int:
    for case in registry():
        relation = ">=" if case.relation == "ge" else "<="
        params = ", ".join(p.describe() for p in case.params) or "none"
        norms = ", ".join(case.norms) if case.norms else "full sweep"
        print(f"{case.id}  [{relation}]")
        print(f"    {case.description}")
        print(f"    params: {params}; norms: {norms}")
    return 0


def _write_report(report: dict, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2)


def _cmd_verify(args) -> int:
    if args.case == "all":
        case_ids = tuple(c.id for c in registry())
    else:
        case_ids = _parse_str_list(args.case)
        for cid in case_ids:
            get_case(cid)
    overrides = {}
    params = _parse_params(args.param)
    if params:
        if len(case_ids) != 1:
            raise OpineqError("--param requires a single --case")
        overrides[case_ids[0]] = ({**params},)
    config = CampaignConfig(
        case_ids=case_ids, dims=args.dims, samples=args.samples,
        norms=args.norms, seed=args.seed, tolerance=args.tol,
        param_overrides=overrides,
    )
    report = run_campaign(config, workers=args.workers)
    for rec in report["cases"]:
        status = "FAIL" if rec["violations"] else "ok"
        print(f"{status:4s} {rec['id']:24s} min_margin {rec['min_margin']:+.3e} "
              f"samples {rec['samples']}")
    print(f"violations: {report['violation_count']}  "
          f"wallclock {report['wallclock_ms']:.0f} ms")
    _write_report(report, args.report)
    return 1 if report["violation_count"] else 0


def _cmd_search(args) -> int:
    report = counterexample_search(
        args.case, _parse_params(args.param), args.budget, args.seed
    )
    _write_report(report, args.report)
    if report["witness"] is None:
        print(f"no witness in {report['evaluations']} evaluations "
              f"(min margin {report['min_margin']:+.3e})")
        return 0
    w = report["witness"]
    print(f"witness found after {report['evaluations']} evaluations: "
          f"dim {w['dim']}, norm {w['norm']}, margin {w['margin']:+.6e} "
          f"(scale {w['scale']:.3e})")
    return 1


def _cmd_eval(args) -> int:
    spec = parse_function(args.function)
    closed = complex(spec.closed_form(__import__("numpy").array([args.point]))[0])
    truncated = weierstrass_truncated(spec, args.point, args.truncate)
    print(f"function     : {spec.id}")
    print(f"point        : {args.point}")
    print(f"closed form  : {closed}")
    print(f"truncated({args.truncate}): {truncated}")
    print(f"abs error    : {abs(closed - truncated):.3e}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "list-cases":
            return _cmd_list_cases()
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "search":
            return _cmd_search(args)
        if args.command == "eval":
            return _cmd_eval(args)
    except OpineqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
