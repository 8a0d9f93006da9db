"""Point deletion and insertion on a single triangulation.

Deleting p keeps every edge not incident to p and retriangulates the part of
conv(A \\ p) covered by the star of p.  Inserting p walks the dual graph of
the smaller triangulation from the triangle containing p (or from the
triangles p sees beyond the hull), restricted to triangles visible from p,
and cones p over each candidate star that passes the geometric checks.
"""
from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from itertools import product

from ..geometry import (
    GeometryError,
    Location,
    PointSet,
    cone_is_empty,
    convex_hull,
    cross,
    point_in_triangle,
)
from ..triangulation import Tri, Triangulation, link_polygon, tri
from .polygon import polygon_triangulations


def _down(i: int, p: int) -> int:
    return i if i < p else i - 1


def _up(i: int, p: int) -> int:
    return i if i < p else i + 1


def delete_point(T: Triangulation, p: int) -> list[Triangulation]:
    """Triangulations of A minus p that keep every edge of T not touching p."""
    ps = T.base
    if ps.n <= 3:
        raise GeometryError("cannot delete from a 3-point set")
    link = link_polygon(T, p)
    keep = [t for t in T.triangles if p not in t]
    if link.closed:
        pockets = [list(link.ring)]
    else:
        pockets = _boundary_pockets(ps, p, link.ring)
    fills = [polygon_triangulations(ring, ps) for ring in pockets]
    sub = ps.without(p)
    out = []
    for choice in product(*fills):
        tris = list(keep)
        for part in choice:
            tris.extend(part)
        out.append(Triangulation(sub, [tuple(_down(i, p) for i in t) for t in tris]))
    return out


def _boundary_pockets(ps: PointSet, p: int, path: tuple[int, ...]) -> list[list[int]]:
    """Pieces of conv(A - p) inside the star of a hull vertex p.

    The new hull chain between p's two hull neighbours only uses link
    vertices; every maximal stretch of the link between consecutive chain
    vertices bounds one pocket polygon.
    """
    pts = ps.points
    pos = {q: i for i, q in enumerate(path)}
    # walking the link from p's successor to its predecessor, conv(A - p) is on the right
    chain: list[int] = []
    for q in path:
        while len(chain) >= 2 and cross(pts[chain[-2]], pts[chain[-1]], pts[q]) > 0:
            chain.pop()
        chain.append(q)
    rest = [i for i in range(ps.n) if i != p]
    for a, b in zip(chain, chain[1:]):
        for q in rest:
            if q not in (a, b) and cross(pts[a], pts[b], pts[q]) > 0:
                raise AssertionError("link chain is not on the new hull")
    pockets = []
    for a, b in zip(chain, chain[1:]):
        i, j = pos[a], pos[b]
        if j - i > 1:
            pockets.append(list(path[i:j + 1]))
    return pockets


@dataclass
class VisibilityForest:
    """Dual-graph triangles visible from p and reachable from the root.

    ``edges`` holds the dual adjacencies among those triangles.  When the
    visible part is a tree, ``parent`` records it and ``is_forest`` is True;
    triangles added beyond the hull for a boundary point can close a cycle.
    """

    root: int
    nodes: list[Tri]
    reach: list[int] = field(default_factory=list)
    edges: dict[int, list[int]] = field(default_factory=dict)
    parent: dict[int, int] = field(default_factory=dict)
    is_forest: bool = True

    def adjacency(self) -> list[tuple[int, int]]:
        return sorted({(min(a, b), max(a, b)) for a, nb in self.edges.items() for b in nb})


def _dual(tris: list[Tri]) -> dict[int, list[int]]:
    by_edge: dict[tuple[int, int], list[int]] = defaultdict(list)
    for idx, (a, b, c) in enumerate(tris):
        for e in ((a, b), (a, c), (b, c)):
            by_edge[e].append(idx)
    adj: dict[int, list[int]] = defaultdict(list)
    for ids in by_edge.values():
        if len(ids) == 2:
            x, y = ids
            adj[x].append(y)
            adj[y].append(x)
    return adj


def visibility_forest(tris: list[Tri], root: int, ps: PointSet, p: int) -> VisibilityForest:
    """BFS over triangles visible from p, starting at ``root``."""
    pts = ps.points
    adj = _dual(tris)
    vis_cache: dict[int, bool] = {}

    def visible(idx: int) -> bool:
        if idx not in vis_cache:
            t = tris[idx]
            vis_cache[idx] = p in t or cone_is_empty([pts[i] for i in t], pts[p], ps)
        return vis_cache[idx]

    forest = VisibilityForest(root, tris, [root], {root: []}, {})
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if not visible(y):
                continue
            forest.edges[x].append(y)
            if y == forest.parent.get(x):
                continue
            if y in forest.edges:
                forest.is_forest = False
                continue
            forest.edges[y] = []
            forest.parent[y] = x
            forest.reach.append(y)
            queue.append(y)
    return forest


def _connected_subsets(forest: VisibilityForest) -> list[frozenset[int]]:
    """Every connected set of reachable triangles that contains the root."""
    edges = forest.edges
    out: list[frozenset[int]] = []

    def grow(current: frozenset[int], frontier: frozenset[int], banned: frozenset[int]):
        out.append(current)
        banned = set(banned)
        for y in sorted(frontier):
            banned.add(y)
            extra = {z for z in edges[y] if z not in current and z not in banned and z not in frontier}
            grow(current | {y}, (frontier | extra) - banned, frozenset(banned))

    start = frozenset({forest.root})
    grow(start, frozenset(edges[forest.root]) - start, start)
    return out


def _ccw(pts, t: Tri) -> tuple[int, int, int]:
    a, b, c = t
    return (a, b, c) if cross(pts[a], pts[b], pts[c]) > 0 else (a, c, b)


def _star_boundary(pts, star: list[Tri]) -> dict[int, int] | None:
    """Directed boundary of a union of triangles as a successor map, or None if not a simple cycle."""
    directed = []
    for t in star:
        a, b, c = _ccw(pts, t)
        directed += [(a, b), (b, c), (c, a)]
    dset = set(directed)
    bd = [(a, b) for a, b in directed if (b, a) not in dset]
    succ: dict[int, int] = {}
    for a, b in bd:
        if a in succ:
            return None
        succ[a] = b
    if set(succ.values()) != set(succ):
        return None
    start = next(iter(succ))
    cur, steps = succ[start], 1
    while cur != start:
        cur = succ[cur]
        steps += 1
    if steps != len(succ):
        return None
    if {i for t in star for i in t} != set(succ):
        return None
    return succ


def _winding(pts, succ: dict[int, int], p: int) -> int:
    px, py = pts[p]
    w = 0
    for a, b in succ.items():
        ax, ay = pts[a]
        bx, by = pts[b]
        if ay <= py < by and cross(pts[a], pts[b], pts[p]) > 0:
            w += 1
        elif by <= py < ay and cross(pts[a], pts[b], pts[p]) < 0:
            w -= 1
    return w


def insert_point(Tp: Triangulation, ps: PointSet, p: int) -> dict[int, list[Triangulation]]:
    """Triangulations of ``ps`` obtained by inserting point ``p`` into ``Tp``.

    ``Tp`` lives on ``ps.without(p)``.  Result is keyed by the degree of p.
    """
    pts = ps.points
    hull = convex_hull(ps)
    base = [tri(*(_up(i, p) for i in t)) for t in Tp.triangles]
    base.sort()
    if p in hull.interior:
        root = next(idx for idx, t in enumerate(base)
                    if point_in_triangle(pts[p], *(pts[i] for i in t)) is Location.STRICTLY_INSIDE)
        tris = base
        required: frozenset[int] = frozenset({root})
    else:
        sub_hull = convex_hull(ps.without(p))
        beyond = [(_up(a, p), _up(b, p)) for a, b in sub_hull.edges()]
        beyond = [(a, b) for a, b in beyond if cross(pts[a], pts[b], pts[p]) < 0]
        # order the beyond edges into a chain along the old hull
        heads = {a for a, _ in beyond}
        first = next(e for e in beyond if e[0] not in {b for _, b in beyond})
        chain = [first]
        nxt = {a: (a, b) for a, b in beyond}
        while chain[-1][1] in heads:
            chain.append(nxt[chain[-1][1]])
        extra = [tri(a, b, p) for a, b in chain]
        tris = base + extra
        root = len(base)
        required = frozenset(range(len(base), len(tris)))
    forest = visibility_forest(tris, root, ps, p)
    out: dict[int, list[Triangulation]] = defaultdict(list)
    for sel in _connected_subsets(forest):
        if not required <= sel:
            continue
        star = [tris[i] for i in sel]
        succ = _star_boundary(pts, star)
        if succ is None:
            continue
        if p in hull.interior:
            if any(cross(pts[a], pts[b], pts[p]) <= 0 for a, b in succ.items()):
                continue
            if _winding(pts, succ, p) != 1:
                continue
            ring_edges = list(succ.items())
        else:
            ring_edges = [(a, b) for a, b in succ.items() if p not in (a, b)]
            if any(cross(pts[a], pts[b], pts[p]) <= 0 for a, b in ring_edges):
                continue
            x, y = succ[p], next(a for a, b in succ.items() if b == p)
            if cross(pts[p], pts[x], pts[y]) <= 0:
                continue
            if any(cross(pts[p], pts[x], pts[u]) <= 0 or cross(pts[p], pts[u], pts[y]) <= 0
                   for u in succ if u not in (p, x, y)):
                continue
        kept = [tris[i] for i in range(len(base)) if i not in sel]
        new = kept + [tri(a, b, p) for a, b in ring_edges]
        degree = len(ring_edges) + (0 if p in hull.interior else 1)
        out[degree].append(Triangulation(ps, new, hull))
    return dict(sorted(out.items()))
