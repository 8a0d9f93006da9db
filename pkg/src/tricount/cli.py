"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 invalid parameters or malformed
input, 3 family certification failed, 4 input not in general position,
5 enumeration limit exceeded.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from pathlib import Path

from . import __version__, formulas
from .cache import ResultCache, cache_key
from .enumeration import DEFAULT_LIMIT, LimitExceeded, TooLarge, brute_force_oracle, enumerate_all
from .families import FamilySpec, build, certify
from .geometry import CollinearInput, GeometryError, format_point_text, parse_point_text
from .verify import CHECKS, DEFAULT_CHECKS, parse_checks, verify_point_set

EXIT_OK, EXIT_CHECK, EXIT_INPUT, EXIT_CERT, EXIT_COLLINEAR, EXIT_LIMIT = 0, 1, 2, 3, 4, 5


class UsageError(Exception):
    """Bad parameters; maps to exit code 2."""


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _load(path: str):
    """Point set plus the sha256 of the file bytes."""
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError:
        raise UsageError(f"{path} is not UTF-8") from None
    ps = parse_point_text(text)
    ps.require_general_position()
    return ps, hashlib.sha256(data).hexdigest()


# -- gen ----------------------------------------------------------------------

def cmd_gen(args) -> int:
    family = args.family.replace("-", "_")
    try:
        spec = FamilySpec(family, k=args.k, n=args.n, seed=args.seed, odd_variant=args.odd)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ps = build(spec)
    cert = certify(spec, ps, count=not args.no_count)
    out = Path(args.output)
    out.write_text(format_point_text(ps, [f"tricount gen {json.dumps(spec.to_dict(), sort_keys=True)}"]),
                   encoding="utf-8")
    sidecar = out.with_name(out.name + ".json")
    sidecar.write_text(json.dumps({"spec": spec.to_dict(), "certification": cert}, indent=2) + "\n",
                       encoding="utf-8")
    summary = {"output": str(out), "n": ps.n, "ok": cert["ok"]}
    for key in ("b", "v", "closed_form", "enumerated", "violating_triple"):
        if key in cert:
            summary[key] = cert[key]
    _emit(summary)
    if not cert["general_position"]:
        return EXIT_COLLINEAR
    return EXIT_OK if cert["ok"] else EXIT_CERT


# -- count --------------------------------------------------------------------

def cmd_count(args) -> int:
    ps, sha = _load(args.input)
    method = "brute_force" if args.method == "brute" else "flip_bfs"
    flags = {"list": args.list, "degree_sums": args.degree_sums}
    if method == "flip_bfs":
        flags["limit"] = args.limit
    cache = None if args.no_cache else ResultCache()
    key = cache_key(sha, method, flags)
    if cache is not None:
        hit = cache.lookup(key)
        if hit is not None:
            _emit({**hit, "cached": True})
            return EXIT_OK
    if method == "brute_force":
        try:
            res = brute_force_oracle(ps, want_list=args.list, want_degree_sums=args.degree_sums)
        except TooLarge as exc:
            raise UsageError(str(exc)) from None
    else:
        res = enumerate_all(ps, want_list=args.list, want_degree_sums=args.degree_sums,
                            limit=args.limit)
    report = res.to_json(sha)
    if not args.degree_sums:
        report["V"], report["B"] = {}, {}
    if args.list:
        report["triangulations"] = [k.hex() for k in res.canonical_list]
    if cache is not None:
        cache.append(key, report)
    _emit({**report, "cached": False})
    return EXIT_OK


# -- verify -------------------------------------------------------------------

def cmd_verify(args) -> int:
    try:
        checks = parse_checks(args.checks)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ps, sha = _load(args.input)
    report = verify_point_set(ps, checks, {"path": args.input, "sha256": sha})
    _emit(report.to_json())
    return EXIT_OK if report.ok else EXIT_CHECK


# -- bound --------------------------------------------------------------------

def cmd_bound(args) -> int:
    if args.v < 0 or args.b < 3:
        raise UsageError("need --v >= 0 and --b >= 3")
    fn = formulas.remark_bound if args.remark else formulas.theorem_bound
    value = fn(args.v, args.b)
    print(str(value))
    print(formulas.decimal_approx(value))
    return EXIT_OK


# -- formula ------------------------------------------------------------------

_FORMULAS = {
    "catalan": ("m", formulas.catalan),
    "double-chain": ("k", formulas.count_double_chain),
    "double-circle": ("k", formulas.count_double_circle),
    "modified-double-chain": ("k", formulas.count_modified_double_chain),
    "deletion": ("i", formulas.deletion_bound),
}


def cmd_formula(args) -> int:
    if args.name == "insertion":
        value = formulas.insertion_bound(args.i, args.location)
    else:
        param, fn = _FORMULAS[args.name]
        arg = getattr(args, param)
        if arg is None:
            raise UsageError(f"{args.name} needs --{param}")
        value = fn(arg)
    print(value)
    return EXIT_OK


# -- repro --------------------------------------------------------------------

def cmd_repro(args) -> int:
    from .repro import CRITERIA, run_suite, suite_report

    numbers = sorted(CRITERIA)
    if args.only:
        try:
            numbers = sorted({int(x) for x in args.only.split(",")})
        except ValueError:
            raise UsageError("--only takes comma-separated criterion numbers") from None
        if not set(numbers) <= set(CRITERIA):
            raise UsageError(f"criteria are numbered {min(CRITERIA)}..{max(CRITERIA)}")
    results = run_suite(numbers, fast=args.fast, threads=args.threads)
    for r in results:
        print(r.line())
    report = suite_report(results, args.fast)
    if args.json:
        Path(args.json).write_text(json.dumps(report.to_json(), indent=2) + "\n", encoding="utf-8")
    return EXIT_OK if report.ok else EXIT_CHECK


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tricount",
        description="Count and verify triangulations of small planar point sets exactly.",
        epilog="Cache file: $TRICOUNT_CACHE (default .tricount/cache.jsonl). "
               "Exit codes: 1 check failed, 2 bad input, 3 certification failed, "
               "4 not in general position, 5 limit exceeded.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                        help="worker processes for independent jobs (default: all cores)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="generate a family point set and certify it")
    p.add_argument("family", choices=["convex", "double-chain", "double-circle",
                                      "modified-double-chain", "random"])
    p.add_argument("--k", type=int, help="chain or polygon size parameter")
    p.add_argument("--n", type=int, help="number of points (convex, random)")
    p.add_argument("--seed", type=int, help="64-bit seed (random)")
    p.add_argument("--odd", action="store_true", help="double circle with one extra interior point")
    p.add_argument("--no-count", action="store_true", help="skip the enumeration part of certification")
    p.add_argument("-o", "--output", required=True, help="point file to write; spec goes to <output>.json")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("count", parents=[common], help="count all triangulations of a point file")
    p.add_argument("input")
    p.add_argument("--method", choices=["flip", "brute"], default="flip")
    p.add_argument("--list", action="store_true", help="include canonical keys (hex) of every triangulation")
    p.add_argument("--degree-sums", action="store_true", help="aggregate interior and boundary degree sums")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="stop after this many triangulations")
    p.add_argument("--no-cache", action="store_true", help="neither read nor write the results cache")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", parents=[common],
                       help="check degree, deletion, insertion and bound claims on every triangulation")
    p.add_argument("input")
    p.add_argument("--checks", default=",".join(DEFAULT_CHECKS),
                   help=f"comma-separated subset of {','.join(CHECKS)}")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bound", parents=[common],
                       help="evaluate the upper bound for v interior and b hull points")
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--remark", action="store_true",
                   help="bound for triangulations that may skip interior points")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("formula", parents=[common], help="evaluate a closed-form count")
    p.add_argument("name", choices=sorted(_FORMULAS) + ["insertion"])
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--location", choices=["interior", "boundary"], default="interior")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("repro", parents=[common], help="run the full reproduction suite")
    p.add_argument("--fast", action="store_true", help="skip enumerations with k >= 5")
    p.add_argument("--json", metavar="OUT", help="write the consolidated report here")
    p.add_argument("--only", metavar="LIST", help="comma-separated criterion numbers")
    p.set_defaults(func=cmd_repro)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"tricount: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CollinearInput as exc:
        print(f"tricount: error: {exc}", file=sys.stderr)
        print(json.dumps({"error": "collinear", "violating_triple": list(exc.triple)}))
        return EXIT_COLLINEAR
    except GeometryError as exc:
        print(f"tricount: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except LimitExceeded as exc:
        print(f"tricount: error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except ValueError as exc:
        # formula domain errors, e.g. k below the family minimum
        print(f"tricount: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
