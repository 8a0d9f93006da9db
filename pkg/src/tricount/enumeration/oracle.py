"""Brute-force oracle: maximal non-crossing edge subsets.

Any straight-line non-crossing graph on a point set with hull size b and v
interior points has at most 3v + 2b - 3 edges, with equality exactly for
triangulations.  So we search non-crossing subsets of all segments and keep
the ones reaching that size.  Shares nothing with the flip machinery.
"""
from __future__ import annotations

import time
from collections import Counter
from itertools import combinations

from ..geometry import PointSet, convex_hull, segments_properly_cross
from ..triangulation import encode_edges
from .result import EnumerationResult, TooLarge

MAX_ORACLE_N = 8


def brute_force_oracle(ps: PointSet, want_list: bool = True,
                       want_degree_sums: bool = True) -> EnumerationResult:
    if ps.n > MAX_ORACLE_N:
        raise TooLarge(f"brute-force oracle is limited to n <= {MAX_ORACLE_N}, got {ps.n}")
    t0 = time.perf_counter()
    ps.require_general_position()
    pts = ps.points
    hull = convex_hull(ps)
    v, b = hull.v, hull.b
    hull_edges = sorted(tuple(sorted(e)) for e in hull.edges())
    others = [e for e in combinations(range(ps.n), 2) if e not in set(hull_edges)]
    m = len(others)
    crosses = [0] * m
    for i in range(m):
        a, c = others[i]
        for j in range(m):
            d, e = others[j]
            if segments_properly_cross(pts[a], pts[c], pts[d], pts[e]):
                crosses[i] |= 1 << j
    need = 3 * v + 2 * b - 3 - len(hull_edges)

    found: list[list[int]] = []

    def search(i: int, chosen: list[int], blocked: int):
        if len(chosen) == need:
            found.append(list(chosen))
            return
        free = [j for j in range(i, m) if not blocked >> j & 1]
        if len(free) < need - len(chosen):
            return
        for pos, j in enumerate(free):
            if len(free) - pos < need - len(chosen):
                return
            chosen.append(j)
            search(j + 1, chosen, blocked | crosses[j])
            chosen.pop()

    search(0, [], 0)

    V: Counter[int] = Counter()
    B: Counter[int] = Counter()
    keys = []
    for sel in found:
        edges = hull_edges + [others[j] for j in sel]
        if want_list:
            keys.append(encode_edges(edges))
        if want_degree_sums:
            deg = [0] * ps.n
            for a, c in edges:
                deg[a] += 1
                deg[c] += 1
            for i, d in enumerate(deg):
                (V if i in hull.interior else B)[d] += 1
    keys.sort()
    return EnumerationResult(
        count=len(found), n=ps.n, v=v, b=b, method="brute_force",
        degree_sums_interior=dict(sorted(V.items())),
        degree_sums_boundary=dict(sorted(B.items())),
        canonical_list=keys if want_list else None,
        elapsed=time.perf_counter() - t0,
    )
