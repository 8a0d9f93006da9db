"""Triangulations of a simple polygon by the interval recurrence over diagonals."""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from ..geometry import GeometryError, PointSet, cross, segments_properly_cross
from ..triangulation import Tri, tri


class NotSimple(GeometryError):
    pass


class _Polygon:
    def __init__(self, ring: Sequence[int], ps: PointSet):
        ring = list(ring)
        if len(ring) < 3 or len(set(ring)) != len(ring):
            raise NotSimple(f"ring {ring} repeats vertices or is too short")
        pts = ps.points
        area2 = sum(cross((0, 0), pts[ring[i]], pts[ring[(i + 1) % len(ring)]])
                    for i in range(len(ring)))
        if area2 == 0:
            raise NotSimple("zero-area ring")
        if area2 < 0:
            ring.reverse()
        self.ring = ring
        self.pts = [pts[i] for i in ring]
        m = len(ring)
        self.m = m
        sides = [(i, (i + 1) % m) for i in range(m)]
        for x in range(m):
            for y in range(x + 2, m):
                if x == 0 and y == m - 1:
                    continue
                a, b = sides[x]
                c, d = sides[y]
                if segments_properly_cross(self.pts[a], self.pts[b], self.pts[c], self.pts[d]):
                    raise NotSimple(f"sides {x} and {y} of the ring cross")
        self.sides = sides
        self._diag = {}

    def _in_cone(self, i: int, j: int) -> bool:
        P, m = self.pts, self.m
        a, a0, a1, b = P[i], P[i - 1], P[(i + 1) % m], P[j]
        if cross(a0, a, a1) > 0:
            return cross(a, b, a0) > 0 and cross(b, a, a1) > 0
        return not (cross(a, b, a1) >= 0 and cross(b, a, a0) >= 0)

    def ok(self, i: int, j: int) -> bool:
        """True if ij is a side or an interior diagonal."""
        if i > j:
            i, j = j, i
        if j - i == 1 or (i == 0 and j == self.m - 1):
            return True
        key = (i, j)
        if key in self._diag:
            return self._diag[key]
        P = self.pts
        good = self._in_cone(i, j) and self._in_cone(j, i)
        if good:
            for a, b in self.sides:
                if a in (i, j) or b in (i, j):
                    continue
                if segments_properly_cross(P[i], P[j], P[a], P[b]):
                    good = False
                    break
        self._diag[key] = good
        return good


def count_polygon_triangulations(ring: Sequence[int], ps: PointSet) -> int:
    poly = _Polygon(ring, ps)

    @lru_cache(maxsize=None)
    def count(i: int, j: int) -> int:
        if j - i == 1:
            return 1
        total = 0
        for k in range(i + 1, j):
            if poly.ok(i, k) and poly.ok(k, j):
                total += count(i, k) * count(k, j)
        return total

    return count(0, poly.m - 1)


def polygon_triangulations(ring: Sequence[int], ps: PointSet) -> list[frozenset[Tri]]:
    """Every triangulation of the polygon, as sets of point-index triangles."""
    poly = _Polygon(ring, ps)
    lab = poly.ring

    @lru_cache(maxsize=None)
    def build(i: int, j: int) -> tuple[frozenset, ...]:
        if j - i == 1:
            return (frozenset(),)
        out = []
        for k in range(i + 1, j):
            if poly.ok(i, k) and poly.ok(k, j):
                t = tri(lab[i], lab[k], lab[j])
                for left in build(i, k):
                    for right in build(k, j):
                        out.append(left | right | {t})
        return tuple(out)

    return list(build(0, poly.m - 1))
