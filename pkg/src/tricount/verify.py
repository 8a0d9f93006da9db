"""Per-point-set checks of the degree identity, deletion, insertion and the bounds.

Every check walks the full set of triangulations, so the inputs are meant to
be small.  Results land in a :class:`VerificationReport`, one entry per
requested check, with counts and bounds carried as decimal strings.
"""
from __future__ import annotations

import time
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

from . import formulas
from .enumeration import (
    MAX_ORACLE_N,
    MAX_SUBSET_V,
    brute_force_oracle,
    delete_point,
    enumerate_all,
    insert_point,
    iter_triangulations,
    subset_triangulation_count,
)
from .geometry import PointSet, convex_hull
from .triangulation import Triangulation, degree_profile, euler_inequality_check

CHECKS = ("euler", "delete", "insert", "duality", "bound", "oracle", "remark")
DEFAULT_CHECKS = ("euler", "delete", "insert", "bound", "oracle", "remark")
# deletion and insertion are run for every (triangulation, point) pair
LOCAL_MAX_N = 10

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class CheckResult:
    name: str
    status: str
    details: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "details": self.details,
                "elapsed_ms": int(round(self.elapsed * 1000))}


@dataclass
class VerificationReport:
    input: dict
    checks: list[CheckResult] = field(default_factory=list)
    counts: dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def to_json(self) -> dict:
        return {
            "schema_version": 1,
            "input": self.input,
            "ok": self.ok,
            "counts": self.counts,
            "checks": [c.to_json() for c in self.checks],
        }


class Context:
    """Lazily computed enumerations shared between checks on one point set."""

    def __init__(self, ps: PointSet):
        ps.require_general_position()
        self.ps = ps
        self.hull = convex_hull(ps)

    @cached_property
    def triangulations(self) -> list[Triangulation]:
        return list(iter_triangulations(self.ps))

    @cached_property
    def result(self):
        return enumerate_all(self.ps, want_list=True, want_degree_sums=True)

    def location(self, p: int) -> str:
        return "interior" if p in self.hull.interior else "boundary"

    @cached_property
    def deletions(self) -> dict[int, list[tuple[bytes, int, list[Triangulation]]]]:
        """For each p: (key of T, degree of p in T, delete_point(T, p)) over all T."""
        out = {}
        for p in range(self.ps.n):
            out[p] = [(T.key(), T.degrees[p], delete_point(T, p)) for T in self.triangulations]
        return out

    @cached_property
    def insertions(self) -> dict[int, list[tuple[bytes, dict[int, list[Triangulation]]]]]:
        """For each p: (key of T', insert_point(T', p)) over all T' of A minus p."""
        out = {}
        for p in range(self.ps.n):
            out[p] = [(Tq.key(), insert_point(Tq, self.ps, p))
                      for Tq in iter_triangulations(self.ps.without(p))]
        return out


def check_euler(ctx: Context) -> tuple[str, dict]:
    bad_identity = bad_inequality = bad_total = 0
    n = ctx.ps.n
    for T in ctx.triangulations:
        prof = degree_profile(T)
        if prof.euler_sum() != 6:
            bad_identity += 1
        if not euler_inequality_check(T):
            bad_inequality += 1
        if prof.degree_total() != 2 * len(T.edges):
            bad_total += 1
    res = ctx.result
    lhs = (n + 6) * res.count
    rhs = res.low_degree_weight()
    ok = bad_identity == bad_inequality == bad_total == 0 and lhs <= rhs
    return (PASS if ok else FAIL), {
        "triangulations": str(len(ctx.triangulations)),
        "identity_violations": bad_identity,
        "inequality_violations": bad_inequality,
        "degree_total_violations": bad_total,
        "summed_lhs": str(lhs),
        "summed_rhs": str(rhs),
    }


def check_delete(ctx: Context) -> tuple[str, dict]:
    if ctx.ps.n > LOCAL_MAX_N:
        return SKIPPED, {"reason": f"n > {LOCAL_MAX_N}"}
    if ctx.ps.n == 3:
        return SKIPPED, {"reason": "no point can be deleted from 3 points"}
    violations = []
    attained: dict[int, int] = defaultdict(int)
    pairs = 0
    for p, rows in ctx.deletions.items():
        for _, deg, res in rows:
            pairs += 1
            cap = formulas.deletion_bound(deg)
            attained[deg] = max(attained[deg], len(res))
            if not 1 <= len(res) <= cap:
                violations.append({"p": p, "degree": deg, "results": len(res), "bound": cap})
    stats = {str(d): f"{attained[d]}/{formulas.deletion_bound(d)}" for d in sorted(attained)}
    return (PASS if not violations else FAIL), {
        "pairs": pairs, "max_attained": stats, "violations": violations[:10],
    }


def check_insert(ctx: Context) -> tuple[str, dict]:
    if ctx.ps.n > LOCAL_MAX_N:
        return SKIPPED, {"reason": f"n > {LOCAL_MAX_N}"}
    if ctx.ps.n == 3:
        return SKIPPED, {"reason": "no smaller set to insert into"}
    violations = []
    attained: dict[str, dict[int, int]] = {"interior": defaultdict(int), "boundary": defaultdict(int)}
    pairs = 0
    for p, rows in ctx.insertions.items():
        loc = ctx.location(p)
        for _, classes in rows:
            pairs += 1
            if loc == "interior" and len(classes.get(3, ())) != 1:
                violations.append({"p": p, "degree": 3, "h": len(classes.get(3, ())), "expected": 1})
            for i, lst in classes.items():
                cap = formulas.insertion_bound(i, loc)
                attained[loc][i] = max(attained[loc][i], len(lst))
                if len(lst) > cap:
                    violations.append({"p": p, "location": loc, "degree": i,
                                       "h": len(lst), "bound": cap})
    stats = {loc: {str(i): f"{m[i]}/{formulas.insertion_bound(i, loc)}" for i in sorted(m)}
             for loc, m in attained.items()}
    return (PASS if not violations else FAIL), {
        "pairs": pairs, "max_attained": stats, "violations": violations[:10],
    }


def check_duality(ctx: Context) -> tuple[str, dict]:
    """Deletion and insertion are inverse relations, and insertion covers Tri(A)."""
    if ctx.ps.n > LOCAL_MAX_N:
        return SKIPPED, {"reason": f"n > {LOCAL_MAX_N}"}
    if ctx.ps.n == 3:
        return SKIPPED, {"reason": "no point can be deleted from 3 points"}
    all_keys = {T.key() for T in ctx.triangulations}
    dual_bad, cover_bad = [], []
    for p in range(ctx.ps.n):
        by_delete: dict[bytes, set] = defaultdict(set)
        for tkey, deg, res in ctx.deletions[p]:
            for Tq in res:
                by_delete[Tq.key()].add((tkey, deg))
        by_insert: dict[bytes, set] = defaultdict(set)
        union = set()
        for qkey, classes in ctx.insertions[p]:
            for i, lst in classes.items():
                for T in lst:
                    by_insert[qkey].add((T.key(), i))
                    union.add(T.key())
        if by_delete != by_insert:
            dual_bad.append(p)
        if union != all_keys:
            cover_bad.append(p)
    ok = not dual_bad and not cover_bad
    return (PASS if ok else FAIL), {"duality_failures": dual_bad, "covering_failures": cover_bad}


def check_bound(ctx: Context) -> tuple[str, dict]:
    res = ctx.result
    v, b = ctx.hull.v, ctx.hull.b
    bound = formulas.theorem_bound(v, b)
    lhs = (6 + v + b) * res.count
    rhs = res.low_degree_weight()
    ok = res.count <= bound and lhs <= rhs
    return (PASS if ok else FAIL), {
        "count": str(res.count),
        "bound": str(bound),
        "bound_decimal": formulas.decimal_approx(bound),
        "summed_lhs": str(lhs),
        "summed_rhs": str(rhs),
    }


def check_oracle(ctx: Context) -> tuple[str, dict]:
    if ctx.ps.n > MAX_ORACLE_N:
        return SKIPPED, {"reason": f"oracle limited to n <= {MAX_ORACLE_N}"}
    brute = brute_force_oracle(ctx.ps, want_list=True, want_degree_sums=True)
    res = ctx.result
    same = (brute.canonical_list == res.canonical_list
            and brute.degree_sums_interior == res.degree_sums_interior
            and brute.degree_sums_boundary == res.degree_sums_boundary)
    return (PASS if same else FAIL), {"flip_bfs": str(res.count), "brute_force": str(brute.count)}


def check_remark(ctx: Context) -> tuple[str, dict]:
    if ctx.hull.v > MAX_SUBSET_V:
        return SKIPPED, {"reason": f"v > {MAX_SUBSET_V}"}
    total = subset_triangulation_count(ctx.ps)
    bound = formulas.remark_bound(ctx.hull.v, ctx.hull.b)
    return (PASS if total <= bound else FAIL), {
        "subset_count": str(total), "bound": str(bound),
        "bound_decimal": formulas.decimal_approx(bound),
    }


RUNNERS: dict[str, Callable[[Context], tuple[str, dict]]] = {
    "euler": check_euler,
    "delete": check_delete,
    "insert": check_insert,
    "duality": check_duality,
    "bound": check_bound,
    "oracle": check_oracle,
    "remark": check_remark,
}


def parse_checks(text: str) -> list[str]:
    names = [c.strip() for c in text.split(",") if c.strip()]
    unknown = [c for c in names if c not in RUNNERS]
    if unknown or not names:
        raise ValueError(f"unknown checks {unknown}; choose from {', '.join(CHECKS)}")
    # each requested check runs exactly once, in the order first given
    return list(dict.fromkeys(names))


def verify_point_set(ps: PointSet, checks=DEFAULT_CHECKS,
                     input_desc: dict | None = None) -> VerificationReport:
    ctx = Context(ps)
    report = VerificationReport(input=input_desc or {}, counts={
        "n": str(ps.n), "v": str(ctx.hull.v), "b": str(ctx.hull.b)})
    for name in checks:
        t0 = time.perf_counter()
        status, details = RUNNERS[name](ctx)
        report.checks.append(CheckResult(name, status, details, time.perf_counter() - t0))
    if "result" in ctx.__dict__:
        report.counts["count"] = str(ctx.result.count)
    return report

