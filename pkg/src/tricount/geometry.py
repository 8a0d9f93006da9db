"""Exact integer predicates and point-set classification.

Everything here works on Python ints, so determinants never overflow; the
coordinate bound is still enforced so that point files stay portable to
fixed-width implementations.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

COORD_LIMIT = 1 << 30


class GeometryError(ValueError):
    pass


class CollinearInput(GeometryError):
    def __init__(self, triple: tuple[int, int, int]):
        self.triple = triple
        super().__init__(f"points {triple} are collinear")


class PointFileError(GeometryError):
    pass


class Point(NamedTuple):
    x: int
    y: int


class Location(enum.Enum):
    STRICTLY_INSIDE = "strictly_inside"
    ON_BOUNDARY = "on_boundary"
    OUTSIDE = "outside"


def cross(a: Sequence[int], b: Sequence[int], c: Sequence[int]) -> int:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def orient(a: Sequence[int], b: Sequence[int], c: Sequence[int]) -> int:
    """+1 if a, b, c turn counterclockwise, -1 if clockwise, 0 if collinear."""
    d = cross(a, b, c)
    return (d > 0) - (d < 0)


def segments_properly_cross(a, b, c, d) -> bool:
    """True iff the open segments ab and cd meet in a single interior point.

    Segments sharing an endpoint never cross.
    """
    if a == c or a == d or b == c or b == d:
        return False
    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)
    return o1 * o2 < 0 and o3 * o4 < 0


def point_in_triangle(p, a, b, c) -> Location:
    s = orient(a, b, c)
    if s == 0:
        raise GeometryError("degenerate triangle")
    o = (orient(a, b, p) * s, orient(b, c, p) * s, orient(c, a, p) * s)
    if min(o) < 0:
        return Location.OUTSIDE
    if 0 in o:
        return Location.ON_BOUNDARY
    return Location.STRICTLY_INSIDE


@dataclass(frozen=True)
class PointSet:
    """Labelled planar points; the index in ``points`` is the label."""

    points: tuple[Point, ...]

    def __post_init__(self):
        pts = tuple(Point(int(x), int(y)) for x, y in self.points)
        object.__setattr__(self, "points", pts)
        if len(pts) < 3:
            raise GeometryError(f"need at least 3 points, got {len(pts)}")
        for p in pts:
            if abs(p.x) > COORD_LIMIT or abs(p.y) > COORD_LIMIT:
                raise GeometryError(f"coordinate out of range: {p}")
        if len(set(pts)) != len(pts):
            raise GeometryError("points are not pairwise distinct")

    @classmethod
    def from_coords(cls, coords: Iterable[Sequence[int]]) -> "PointSet":
        return cls(tuple(Point(int(x), int(y)) for x, y in coords))

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    @property
    def n(self) -> int:
        return len(self.points)

    def orient(self, i: int, j: int, k: int) -> int:
        p = self.points
        return orient(p[i], p[j], p[k])

    def subset(self, indices: Sequence[int]) -> "PointSet":
        return PointSet(tuple(self.points[i] for i in indices))

    def without(self, p: int) -> "PointSet":
        return PointSet(self.points[:p] + self.points[p + 1:])

    def require_general_position(self) -> None:
        bad = general_position_check(self)
        if bad is not None:
            raise CollinearInput(bad)


@dataclass(frozen=True)
class HullClassification:
    boundary: tuple[int, ...]
    interior: frozenset[int]

    @property
    def b(self) -> int:
        return len(self.boundary)

    @property
    def v(self) -> int:
        return len(self.interior)

    def is_boundary(self, i: int) -> bool:
        return i not in self.interior

    def edges(self) -> list[tuple[int, int]]:
        """Directed counterclockwise hull edges."""
        bd = self.boundary
        return [(bd[i], bd[(i + 1) % len(bd)]) for i in range(len(bd))]


def general_position_check(ps: PointSet) -> tuple[int, int, int] | None:
    """Return the lexicographically first collinear triple, or None."""
    pts = ps.points
    n = len(pts)
    for i in range(n):
        a = pts[i]
        for j in range(i + 1, n):
            b = pts[j]
            for k in range(j + 1, n):
                if cross(a, b, pts[k]) == 0:
                    return (i, j, k)
    return None


def convex_hull(ps: PointSet) -> HullClassification:
    """Monotone chain hull; boundary is counterclockwise from the lex-min point.

    Raises CollinearInput if a collinear triple shows up on the hull scan.
    """
    pts = ps.points
    order = sorted(range(len(pts)), key=lambda i: pts[i])

    def half(seq):
        chain: list[int] = []
        for i in seq:
            while len(chain) >= 2:
                c = cross(pts[chain[-2]], pts[chain[-1]], pts[i])
                if c == 0:
                    raise CollinearInput(tuple(sorted((chain[-2], chain[-1], i))))
                if c < 0:
                    chain.pop()
                else:
                    break
            chain.append(i)
        return chain

    lower = half(order)
    upper = half(reversed(order))
    boundary = tuple(lower[:-1] + upper[:-1])
    if len(boundary) < 3:
        raise CollinearInput(tuple(order[:3]))
    interior = frozenset(range(len(pts))) - set(boundary)
    return HullClassification(boundary, interior)


def cone_is_empty(t: Sequence[Point], p: Point, ps: PointSet) -> bool:
    """True iff no other point of ``ps`` lies strictly inside conv(t + [p]).

    The hull of four points is either a triangle (p inside t, or one vertex
    of t inside the triangle spanned by p and the other two) or a convex
    quadrilateral; both are handled by taking the hull explicitly.
    """
    corners = set(t) | {p}
    hull = _small_hull(list(corners))
    m = len(hull)
    for q in ps.points:
        if q in corners:
            continue
        if all(cross(hull[i], hull[(i + 1) % m], q) > 0 for i in range(m)):
            return False
    return True


def _small_hull(pts: list[Point]) -> list[Point]:
    pts = sorted(pts)
    if len(pts) < 3:
        return pts

    def half(seq):
        chain: list[Point] = []
        for q in seq:
            while len(chain) >= 2 and cross(chain[-2], chain[-1], q) <= 0:
                chain.pop()
            chain.append(q)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    return lower[:-1] + upper[:-1]


def read_point_file(path: str | Path) -> PointSet:
    return parse_point_text(Path(path).read_text(encoding="utf-8"))


def parse_point_text(text: str) -> PointSet:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise PointFileError("empty point file")
    try:
        n = int(lines[0])
    except ValueError:
        raise PointFileError(f"first line must be the point count, got {lines[0]!r}") from None
    if len(lines) - 1 != n:
        raise PointFileError(f"header says {n} points, found {len(lines) - 1}")
    coords = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise PointFileError(f"malformed point line {ln!r}")
        try:
            coords.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise PointFileError(f"non-integer coordinate in {ln!r}") from None
    return PointSet.from_coords(coords)


def format_point_text(ps: PointSet, comments: Sequence[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(str(ps.n))
    out.extend(f"{p.x} {p.y}" for p in ps.points)
    return "\n".join(out) + "\n"


def write_point_file(ps: PointSet, path: str | Path, comments: Sequence[str] = ()) -> None:
    Path(path).write_text(format_point_text(ps, comments), encoding="utf-8")
