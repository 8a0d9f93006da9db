"""One-shot reproduction suite: every acceptance criterion as a callable check.

Each criterion returns a :class:`CriterionResult`; :func:`run_suite` runs a
selection of them, optionally across worker processes, and folds the
outcomes into a :class:`~tricount.verify.VerificationReport`.
"""
from __future__ import annotations

import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable

from . import formulas
from .enumeration import (
    brute_force_oracle,
    enumerate_all,
    iter_triangulations,
    subset_triangulation_count,
)
from .families import FamilySpec, build, closed_form, random_points
from .geometry import PointSet, convex_hull
from .triangulation import degree_profile, euler_inequality_check
from .verify import FAIL, PASS, CheckResult, Context, VerificationReport

# seeds of the random sets used by the criteria; n cycles through the stated range
ORACLE_SEEDS = range(100)
LOCAL_SEEDS = range(50)
DUALITY_SEEDS = range(20)
REMARK_RANDOM_SETS = 20


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    details: dict = field(default_factory=dict)
    elapsed: float = 0.0
    time_limit: float | None = None

    @property
    def within_time(self) -> bool:
        return self.time_limit is None or self.elapsed <= self.time_limit

    @property
    def ok(self) -> bool:
        return self.passed and self.within_time

    def line(self) -> str:
        limit = f" (limit {self.time_limit:g} s)" if self.time_limit is not None else ""
        verdict = "PASS" if self.ok else "FAIL"
        note = "" if self.within_time else " [over time limit]"
        return f"criterion {self.number:2d} {verdict}  {self.title}  {self.elapsed:.2f} s{limit}{note}"

    def to_check(self) -> CheckResult:
        details = dict(self.details)
        if self.time_limit is not None:
            details["time_limit_s"] = self.time_limit
        return CheckResult(f"criterion_{self.number}", PASS if self.ok else FAIL, details, self.elapsed)


CRITERIA: dict[int, tuple[str, float | None, Callable[[bool], tuple[bool, dict]]]] = {}


def criterion(number: int, title: str, time_limit: float | None = None):
    def wrap(fn):
        CRITERIA[number] = (title, time_limit, fn)
        return fn
    return wrap


# -- point sets -------------------------------------------------------------

def _spec(family, **kw) -> FamilySpec:
    return FamilySpec(family, **kw)


def count_family_specs(fast: bool) -> dict[int, list[tuple[FamilySpec, int]]]:
    """Family instances of criteria 1-4 with their expected counts."""
    big = not fast
    return {
        1: [(_spec("convex", n=n), c) for n, c in
            zip(range(3, 11), (1, 2, 5, 14, 42, 132, 429, 1430))],
        2: [(_spec("double_chain", k=k), c) for k, c in ((3, 6), (4, 80), (5, 1750), (6, 49392))
            if big or k < 5],
        3: [(_spec("double_circle", k=k), c) for k, c in ((3, 4), (4, 30), (5, 250))
            if big or k < 5],
        4: [(_spec("modified_double_chain", k=k), c) for k, c in ((3, 8), (4, 150), (5, 3920))
            if big or k < 5],
    }


def small_family_specs() -> list[FamilySpec]:
    """Every family instance with at most seven points."""
    out = [_spec("convex", n=n) for n in range(3, 8)]
    out += [_spec("double_chain", k=k) for k in (2, 3)]
    out += [_spec("double_circle", k=3), _spec("double_circle", k=3, odd_variant=True)]
    out.append(_spec("modified_double_chain", k=3))
    return out


def oracle_random_sets() -> list[tuple[int, PointSet]]:
    return [(s, random_points(3 + s % 5, s)) for s in ORACLE_SEEDS]


def local_random_sets() -> list[tuple[int, PointSet]]:
    return [(s, random_points(5 + s % 5, s)) for s in LOCAL_SEEDS]


def duality_random_sets() -> list[tuple[int, PointSet]]:
    return [(s, random_points(5 + s % 4, s)) for s in DUALITY_SEEDS]


def remark_random_sets() -> list[tuple[int, PointSet]]:
    """The first sets, by seed, with n in 5..9 and at most four interior points."""
    out = []
    seed = 0
    while len(out) < REMARK_RANDOM_SETS:
        ps = random_points(5 + seed % 5, seed)
        if convex_hull(ps).v <= 4:
            out.append((seed, ps))
        seed += 1
    return out


@lru_cache(maxsize=None)
def _family_result(spec: FamilySpec):
    return enumerate_all(build(spec), want_degree_sums=True)


def _label(spec: FamilySpec) -> str:
    size = f"n={spec.n}" if spec.k is None else f"k={spec.k}"
    return f"{spec.family}{'_odd' if spec.odd_variant else ''} {size}"


# -- criteria ---------------------------------------------------------------

def _count_rows(number: int, fast: bool) -> tuple[bool, dict]:
    rows, ok = {}, True
    for spec, want in count_family_specs(fast)[number]:
        got = _family_result(spec).count
        formula = closed_form(spec)
        good = got == want == formula
        ok &= good
        rows[_label(spec)] = {"enumerated": str(got), "expected": str(want),
                              "closed_form": str(formula), "ok": good}
    return ok, rows


@criterion(1, "convex polygons n=3..10 give the Catalan row", 10)
def crit_convex(fast: bool):
    return _count_rows(1, fast)


@criterion(2, "double chain counts 6, 80, 1750 and 49392 match the formula", 60)
def crit_double_chain(fast: bool):
    return _count_rows(2, fast)


@criterion(3, "double circle counts 4, 30, 250 match the formula", 60)
def crit_double_circle(fast: bool):
    return _count_rows(3, fast)


@criterion(4, "modified double chain counts 8, 150, 3920", 60)
def crit_modified(fast: bool):
    ok, rows = _count_rows(4, fast)
    t8 = _family_result(_spec("modified_double_chain", k=4)).count
    rows["table_T8"] = {"enumerated": str(t8), "expected": "150"}
    return ok and t8 == 150, rows


@criterion(5, "flip BFS and brute force agree on all small sets", 300)
def crit_oracle(fast: bool):
    mismatches = []
    checked = 0
    sets = [(_label(s), build(s)) for s in small_family_specs()]
    sets += [(f"random seed={s} n={ps.n}", ps) for s, ps in oracle_random_sets()]
    for name, ps in sets:
        flip = enumerate_all(ps, want_list=True)
        brute = brute_force_oracle(ps, want_list=True, want_degree_sums=False)
        checked += 1
        if flip.canonical_list != brute.canonical_list:
            mismatches.append(name)
    return not mismatches, {"sets": checked, "mismatches": mismatches}


@criterion(6, "degree identity and inequality hold for every triangulation of criteria 1-4")
def crit_euler(fast: bool):
    total = bad = 0
    failures = []
    for rows in count_family_specs(fast).values():
        for spec, _ in rows:
            ps = build(spec)
            n = ps.n
            for T in iter_triangulations(ps):
                total += 1
                prof = degree_profile(T)
                if prof.euler_sum() != 6 or not euler_inequality_check(T):
                    bad += 1
                    if len(failures) < 5:
                        failures.append({"set": _label(spec), "n": n})
    return bad == 0, {"triangulations": str(total), "exceptions": bad, "examples": failures}


def _local_sets():
    return [(f"seed={s} n={ps.n}", Context(ps)) for s, ps in local_random_sets()]


@criterion(7, "deletion yields between 1 and C(i-2) triangulations on 50 random sets")
def crit_delete(fast: bool):
    attained: dict[int, int] = defaultdict(int)
    violations = []
    pairs = 0
    for name, ctx in _local_sets():
        for p, rows in ctx.deletions.items():
            for _, deg, res in rows:
                pairs += 1
                attained[deg] = max(attained[deg], len(res))
                if not 1 <= len(res) <= formulas.deletion_bound(deg):
                    violations.append(f"{name} p={p} deg={deg} got {len(res)}")
    ratios = {str(d): f"{attained[d]}/{formulas.deletion_bound(d)}" for d in sorted(attained)}
    return not violations, {"pairs": pairs, "max_attained": ratios, "violations": violations[:10]}


# bounds the statement lists explicitly, on top of the general ones
_NAMED_INSERTION = {"interior": {4: 3, 5: 9, 6: 28}, "boundary": {2: 1, 3: 1, 4: 2}}


@criterion(8, "insertion class sizes respect the Catalan differences on 50 random sets")
def crit_insert(fast: bool):
    attained = {"interior": defaultdict(int), "boundary": defaultdict(int)}
    violations = []
    pairs = 0
    for name, ctx in _local_sets():
        for p, rows in ctx.insertions.items():
            loc = ctx.location(p)
            for _, classes in rows:
                pairs += 1
                if loc == "interior" and len(classes.get(3, ())) != 1:
                    violations.append(f"{name} p={p} h3={len(classes.get(3, ()))}")
                for i, lst in classes.items():
                    attained[loc][i] = max(attained[loc][i], len(lst))
                    cap = min(formulas.insertion_bound(i, loc), _NAMED_INSERTION[loc].get(i, 10**9))
                    if len(lst) > cap:
                        violations.append(f"{name} p={p} {loc} h{i}={len(lst)} > {cap}")
    ratios = {loc: {str(i): f"{m[i]}/{formulas.insertion_bound(i, loc)}" for i in sorted(m)}
              for loc, m in attained.items()}
    return not violations, {"pairs": pairs, "max_attained": ratios, "violations": violations[:10]}


@criterion(9, "deletion and insertion are dual and insertion covers Tri(A) on 20 random sets")
def crit_duality(fast: bool):
    from .verify import check_duality

    failures = []
    for s, ps in duality_random_sets():
        status, details = check_duality(Context(ps))
        if status == FAIL:
            failures.append({"seed": s, **details})
    return not failures, {"sets": len(DUALITY_SEEDS), "failures": failures}


@criterion(10, "counts stay below the main bound and the summed degree inequality holds")
def crit_bound(fast: bool):
    specs = [s for rows in count_family_specs(fast).values() for s, _ in rows]
    specs += [s for s in small_family_specs() if s not in specs]
    results = [(_label(s), _family_result(s)) for s in specs]
    results += [(f"random seed={s} n={ps.n}", enumerate_all(ps, want_degree_sums=True))
                for s, ps in oracle_random_sets()]
    failures = []
    tightest = (Fraction(0), "")
    for name, res in results:
        bound = formulas.theorem_bound(res.v, res.b)
        ratio = Fraction(res.count) / bound
        tightest = max(tightest, (ratio, name))
        if not (res.count <= bound and (6 + res.v + res.b) * res.count <= res.low_degree_weight()):
            failures.append(name)
    return not failures, {"sets": len(results), "failures": failures,
                          "largest_count_to_bound": formulas.decimal_approx(tightest[0]),
                          "largest_at": tightest[1]}


@criterion(11, "subset counts stay below the relaxed bound")
def crit_remark(fast: bool):
    specs = [_spec("convex", n=n) for n in range(3, 11)]
    specs += [_spec("double_chain", k=k) for k in range(2, 6)]
    specs += [_spec("double_circle", k=k) for k in range(3, 7)]
    specs += [_spec("double_circle", k=k, odd_variant=True) for k in range(3, 6)]
    specs += [_spec("modified_double_chain", k=k) for k in (3, 4)]
    sets = [(_label(s), build(s)) for s in specs]
    sets += [(f"random seed={s} n={ps.n}", ps) for s, ps in remark_random_sets()]
    failures = []
    rows = {}
    for name, ps in sets:
        hull = convex_hull(ps)
        assert hull.v <= 6, name
        total = subset_triangulation_count(ps)
        bound = formulas.remark_bound(hull.v, hull.b)
        rows[name] = str(total)
        if total > bound:
            failures.append(name)
    return not failures, {"sets": len(sets), "failures": failures, "subset_counts": rows}


@criterion(12, "closed-form identities hold exactly")
def crit_identities(fast: bool):
    c = formulas.catalan_by_recurrence(21)
    checks = {
        "catalan_recurrence": all(formulas.catalan(m) == c[m] for m in range(21)),
        "interior_insertion_forms": all(
            formulas.catalan(i - 1) - formulas.catalan(i - 2)
            == Fraction(3, 2 * i - 3) * comb(2 * i - 3, i - 3) for i in range(3, 65)),
        "modified_ratio_exact": all(
            Fraction(formulas.count_modified_double_chain(k), formulas.count_double_chain(k))
            == Fraction((2 * k - 3) * (2 * k - 2), k * k) for k in range(3, 41)),
        "modified_ratio_band": all(
            Fraction(7, 2) <= formulas.modified_to_plain_ratio(k) < 4 for k in range(20, 41)),
        "double_circle_below_12k": all(formulas.count_double_circle(k) <= 12**k
                                       for k in range(3, 65)),
        "induction_identity": all(formulas.induction_step_holds(v, b)
                                  for v in range(31) for b in range(3, 31)),
        "bound_0_3": formulas.theorem_bound(0, 3) == Fraction(49, 12),
        "modified_k9_below_record": formulas.count_modified_double_chain(9) < 17_309_628_327,
    }
    return all(checks.values()), checks


# -- driver -----------------------------------------------------------------

def run_criterion(number: int, fast: bool = False) -> CriterionResult:
    title, limit, fn = CRITERIA[number]
    t0 = time.perf_counter()
    passed, details = fn(fast)
    return CriterionResult(number, title, bool(passed), details, time.perf_counter() - t0, limit)


def run_suite(numbers=None, fast: bool = False, threads: int = 1) -> list[CriterionResult]:
    numbers = sorted(CRITERIA) if numbers is None else list(numbers)
    if threads <= 1 or len(numbers) == 1:
        return [run_criterion(k, fast) for k in numbers]
    with ProcessPoolExecutor(max_workers=min(threads, len(numbers))) as pool:
        futures = [pool.submit(run_criterion, k, fast) for k in numbers]
        return [f.result() for f in futures]


def suite_report(results: list[CriterionResult], fast: bool) -> VerificationReport:
    report = VerificationReport(input={"suite": "repro", "fast": fast})
    report.checks = [r.to_check() for r in results]
    report.counts = {"criteria": str(len(results)),
                     "passed": str(sum(r.ok for r in results))}
    return report
