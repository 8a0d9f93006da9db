"""Triangulation value type, degree accounting and flips."""
from __future__ import annotations

import struct
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .geometry import (
    HullClassification,
    PointSet,
    convex_hull,
    cross,
    segments_properly_cross,
)

Edge = tuple[int, int]
Tri = tuple[int, int, int]


def edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


def tri(a: int, b: int, c: int) -> Tri:
    return tuple(sorted((a, b, c)))  # type: ignore[return-value]


def edges_of(triangles: Iterable[Tri]) -> frozenset[Edge]:
    es = set()
    for a, b, c in triangles:
        es.add((a, b))
        es.add((a, c))
        es.add((b, c))
    return frozenset(es)


def encode_edges(edges: Iterable[Edge]) -> bytes:
    """Canonical byte layout: LE u32 pair count, then LE u32 index pairs, sorted."""
    es = sorted(edges)
    flat = [i for e in es for i in e]
    return struct.pack(f"<I{len(flat)}I", len(es), *flat)


def decode_edges(key: bytes) -> list[Edge]:
    (m,) = struct.unpack_from("<I", key, 0)
    flat = struct.unpack_from(f"<{2 * m}I", key, 4)
    return [(flat[2 * i], flat[2 * i + 1]) for i in range(m)]


class Triangulation:
    """Immutable set of triangles over a fixed PointSet.

    Triangles are the source of truth; edges, the edge-to-apex map and the
    hull classification are derived lazily.
    """

    def __init__(self, base: PointSet, triangles: Iterable[Iterable[int]],
                 hull: HullClassification | None = None):
        self.base = base
        self.triangles: frozenset[Tri] = frozenset(tri(*t) for t in triangles)
        self._hull = hull

    @property
    def hull(self) -> HullClassification:
        if self._hull is None:
            self._hull = convex_hull(self.base)
        return self._hull

    @cached_property
    def edges(self) -> frozenset[Edge]:
        return edges_of(self.triangles)

    @cached_property
    def apexes(self) -> dict[Edge, list[int]]:
        m: dict[Edge, list[int]] = defaultdict(list)
        for a, b, c in self.triangles:
            m[(a, b)].append(c)
            m[(a, c)].append(b)
            m[(b, c)].append(a)
        return dict(m)

    @cached_property
    def degrees(self) -> list[int]:
        deg = [0] * self.base.n
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def key(self) -> bytes:
        return canonical_key(self)

    def __eq__(self, other):
        return (isinstance(other, Triangulation) and self.base == other.base
                and self.edges == other.edges)

    def __hash__(self):
        return hash(self.edges)

    def __repr__(self):
        return f"Triangulation(n={self.base.n}, t={len(self.triangles)})"


@dataclass
class DegreeProfile:
    v_deg: dict[int, int] = field(default_factory=dict)
    b_deg: dict[int, int] = field(default_factory=dict)

    @property
    def v(self) -> int:
        return sum(self.v_deg.values())

    @property
    def b(self) -> int:
        return sum(self.b_deg.values())

    def euler_sum(self) -> int:
        return (sum((6 - i) * c for i, c in self.v_deg.items())
                + sum((4 - j) * c for j, c in self.b_deg.items()))

    def low_degree_weight(self) -> int:
        """4v3 + 3v4 + 2v5 + v6 + 3b2 + 2b3 + b4."""
        v, b = self.v_deg, self.b_deg
        return (4 * v.get(3, 0) + 3 * v.get(4, 0) + 2 * v.get(5, 0) + v.get(6, 0)
                + 3 * b.get(2, 0) + 2 * b.get(3, 0) + b.get(4, 0))

    def degree_total(self) -> int:
        return (sum(i * c for i, c in self.v_deg.items())
                + sum(j * c for j, c in self.b_deg.items()))


@dataclass(frozen=True)
class LinkPolygon:
    center: int
    ring: tuple[int, ...]
    closed: bool


def validate(T: Triangulation) -> str | None:
    """Return None if T is a triangulation of its base, else the first problem found."""
    ps = T.base
    pts = ps.points
    n = ps.n
    hull = T.hull
    v, b = hull.v, hull.b
    for t in T.triangles:
        if len(set(t)) != 3 or min(t) < 0 or max(t) >= n:
            return f"bad triangle {t}"
        if cross(pts[t[0]], pts[t[1]], pts[t[2]]) == 0:
            return f"degenerate triangle {t}"
    edges = sorted(T.edges)
    for x in range(len(edges)):
        a, b_ = edges[x]
        for y in range(x + 1, len(edges)):
            c, d = edges[y]
            if segments_properly_cross(pts[a], pts[b_], pts[c], pts[d]):
                return f"edges {edges[x]} and {edges[y]} cross"
    if len(T.triangles) != 2 * v + b - 2:
        return f"triangle count {len(T.triangles)} != 2v+b-2 = {2 * v + b - 2}"
    if len(edges) != 3 * v + 2 * b - 3:
        return f"edge count {len(edges)} != 3v+2b-3 = {3 * v + 2 * b - 3}"
    used = {i for t in T.triangles for i in t}
    if len(used) != n:
        return f"points {sorted(set(range(n)) - used)} are not vertices"
    for t in T.triangles:
        a, b_, c = (pts[i] for i in t)
        s = 1 if cross(a, b_, c) > 0 else -1
        for q in range(n):
            if q in t:
                continue
            p = pts[q]
            if (s * cross(a, b_, p) > 0 and s * cross(b_, c, p) > 0
                    and s * cross(c, a, p) > 0):
                return f"point {q} inside triangle {t}"
    hull_edges = {edge(a, b_) for a, b_ in hull.edges()}
    for e, ap in T.apexes.items():
        if e in hull_edges:
            if len(ap) != 1:
                return f"hull edge {e} has {len(ap)} triangles"
        else:
            if len(ap) != 2:
                return f"interior edge {e} has {len(ap)} triangles"
            s1 = cross(pts[e[0]], pts[e[1]], pts[ap[0]])
            s2 = cross(pts[e[0]], pts[e[1]], pts[ap[1]])
            if s1 * s2 >= 0:
                return f"triangles on edge {e} overlap"
    missing = hull_edges - T.edges
    if missing:
        return f"hull edges {sorted(missing)} missing"
    return None


def seed_triangulation(ps: PointSet) -> Triangulation:
    """Lexicographic incremental scan triangulation."""
    ps.require_general_position()
    pts = ps.points
    order = sorted(range(ps.n), key=lambda i: pts[i])
    a, b, c = order[:3]
    if cross(pts[a], pts[b], pts[c]) < 0:
        b, c = c, b
    hull = [a, b, c]  # counterclockwise
    tris = [tri(a, b, c)]
    for p in order[3:]:
        m = len(hull)
        vis = [cross(pts[hull[i]], pts[hull[(i + 1) % m]], pts[p]) < 0 for i in range(m)]
        for i in range(m):
            if vis[i]:
                tris.append(tri(hull[i], hull[(i + 1) % m], p))
        # visible edges form one contiguous run; hull vertices strictly inside it drop out
        start = next(i for i in range(m) if vis[i] and not vis[i - 1])
        end = start
        while vis[end % m]:
            end += 1
        keep = [hull[(end + j) % m] for j in range(m - (end - start) + 1)]
        hull = keep + [p]
    return Triangulation(ps, tris)


def flips(T: Triangulation) -> list[tuple[Edge, Triangulation]]:
    """All Lawson flips of T, in edge order."""
    pts = T.base.points
    out = []
    for e in sorted(T.apexes):
        ap = T.apexes[e]
        if len(ap) != 2:
            continue
        a, b = e
        c, d = ap
        if cross(pts[c], pts[d], pts[a]) * cross(pts[c], pts[d], pts[b]) < 0:
            new = (T.triangles - {tri(a, b, c), tri(a, b, d)}) | {tri(c, d, a), tri(c, d, b)}
            out.append((e, Triangulation(T.base, new, T._hull)))
    return out


def degree_profile(T: Triangulation) -> DegreeProfile:
    hull = T.hull
    vd: Counter[int] = Counter()
    bd: Counter[int] = Counter()
    for i, d in enumerate(T.degrees):
        if i in hull.interior:
            vd[d] += 1
        else:
            bd[d] += 1
    return DegreeProfile(dict(sorted(vd.items())), dict(sorted(bd.items())))


def euler_inequality_check(T: Triangulation) -> bool:
    prof = degree_profile(T)
    return T.base.n + 6 <= prof.low_degree_weight()


def canonical_key(T: Triangulation) -> bytes:
    return encode_edges(T.edges)


def link_polygon(T: Triangulation, p: int) -> LinkPolygon:
    """Neighbours of p in counterclockwise order around p."""
    pts = T.base.points
    nxt: dict[int, int] = {}
    for t in T.triangles:
        if p not in t:
            continue
        a, b = (i for i in t if i != p)
        if cross(pts[p], pts[a], pts[b]) < 0:
            a, b = b, a
        nxt[a] = b
    if not nxt:
        raise ValueError(f"{p} is not a vertex")
    starts = set(nxt) - set(nxt.values())
    closed = not starts
    cur = min(nxt) if closed else starts.pop()
    ring = [cur]
    while cur in nxt:
        cur = nxt[cur]
        if cur == ring[0]:
            break
        ring.append(cur)
    return LinkPolygon(p, tuple(ring), closed)
