"""Breadth-first traversal of the flip graph.

Connectivity of the flip graph of a planar point set is a classical result
we rely on; the brute-force oracle cross-checks it at small n.
"""
from __future__ import annotations

import time
from collections import Counter, deque
from typing import Iterator

from ..geometry import PointSet, convex_hull
from ..triangulation import Triangulation, encode_edges, seed_triangulation
from .result import EnumerationResult, LimitExceeded

DEFAULT_LIMIT = 10**10


def _orient_table(ps: PointSet):
    pts = ps.points
    n = ps.n

    def sign(i, j, k):
        a, b, c = pts[i], pts[j], pts[k]
        d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        return (d > 0) - (d < 0)

    return [[[sign(i, j, k) for k in range(n)] for j in range(n)] for i in range(n)]


def _walk(ps: PointSet, limit: int) -> Iterator[tuple[frozenset, frozenset]]:
    """Yield (edges, triangles) of every triangulation exactly once."""
    seed = seed_triangulation(ps)
    ori = _orient_table(ps)
    start_edges = seed.edges
    seen = {start_edges}
    queue = deque([(start_edges, seed.triangles)])
    while queue:
        edges, tris = queue.popleft()
        yield edges, tris
        apex: dict = {}
        for t in tris:
            a, b, c = t
            apex.setdefault((a, b), []).append(c)
            apex.setdefault((a, c), []).append(b)
            apex.setdefault((b, c), []).append(a)
        for (a, b), ap in apex.items():
            if len(ap) != 2:
                continue
            c, d = ap
            ocd = ori[c][d]
            if ocd[a] * ocd[b] >= 0:
                continue
            cd = (c, d) if c < d else (d, c)
            new_edges = edges.difference(((a, b),)).union((cd,))
            if new_edges in seen:
                continue
            if len(seen) >= limit:
                raise LimitExceeded(limit)
            seen.add(new_edges)
            t1 = tuple(sorted((a, b, c)))
            t2 = tuple(sorted((a, b, d)))
            t3 = tuple(sorted((c, d, a)))
            t4 = tuple(sorted((c, d, b)))
            queue.append((new_edges, tris.difference((t1, t2)).union((t3, t4))))


def iter_triangulations(ps: PointSet, limit: int = DEFAULT_LIMIT) -> Iterator[Triangulation]:
    hull = convex_hull(ps)
    for _, tris in _walk(ps, limit):
        yield Triangulation(ps, tris, hull)


def enumerate_all(ps: PointSet, want_list: bool = False, want_degree_sums: bool = False,
                  limit: int = DEFAULT_LIMIT) -> EnumerationResult:
    t0 = time.perf_counter()
    ps.require_general_position()
    hull = convex_hull(ps)
    interior = hull.interior
    n = ps.n
    count = 0
    V: Counter[int] = Counter()
    B: Counter[int] = Counter()
    keys = [] if want_list else None
    for edges, _ in _walk(ps, limit):
        count += 1
        if want_degree_sums:
            deg = [0] * n
            for a, b in edges:
                deg[a] += 1
                deg[b] += 1
            for i in range(n):
                if i in interior:
                    V[deg[i]] += 1
                else:
                    B[deg[i]] += 1
        if keys is not None:
            keys.append(encode_edges(edges))
    if keys is not None:
        keys.sort()
    return EnumerationResult(
        count=count, n=n, v=hull.v, b=hull.b, method="flip_bfs",
        degree_sums_interior=dict(sorted(V.items())),
        degree_sums_boundary=dict(sorted(B.items())),
        canonical_list=keys, elapsed=time.perf_counter() - t0,
    )
