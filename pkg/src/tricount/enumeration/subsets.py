from __future__ import annotations

from itertools import combinations

from ..geometry import PointSet, convex_hull
from .flipgraph import DEFAULT_LIMIT, enumerate_all
from .result import TooLarge

MAX_SUBSET_V = 12


def subset_triangulation_count(ps: PointSet, limit: int = DEFAULT_LIMIT) -> int:
    """Triangulations of conv(A) whose vertex set is the hull plus any subset of interior points."""
    ps.require_general_position()
    hull = convex_hull(ps)
    if hull.v > MAX_SUBSET_V:
        raise TooLarge(f"{hull.v} interior points; subset counting is limited to {MAX_SUBSET_V}")
    inner = sorted(hull.interior)
    total = 0
    for r in range(len(inner) + 1):
        for pick in combinations(inner, r):
            idx = sorted(list(hull.boundary) + list(pick))
            total += enumerate_all(ps.subset(idx), limit=limit).count
    return total
