"""Integer constructions of the extremal point families, with certification.

The defining conditions are combinatorial ("sufficiently close", "visible
from one another"), so each generator emits a fixed integer construction
and :func:`certify` checks it: general position, hull sizes, and when
enumeration is cheap enough, the triangulation count against the closed
form.
"""
from __future__ import annotations

import math
import random
from dataclasses import asdict, dataclass

from . import formulas
from .geometry import PointSet, convex_hull, cross, general_position_check

FAMILIES = ("convex", "double_chain", "double_circle", "modified_double_chain", "random")
RANDOM_BOX_BITS = 20
# enumeration sizes beyond which certify() skips the count check
CERTIFY_MAX_COUNT = 60_000


class GenerationFailed(RuntimeError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    family: str
    k: int | None = None
    n: int | None = None
    seed: int | None = None
    odd_variant: bool = False

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family in ("convex", "random"):
            if self.n is None or self.n < 3:
                raise ValueError(f"{self.family} needs n >= 3")
            if self.family == "random" and self.seed is None:
                raise ValueError("random family needs a seed")
        else:
            low = {"double_chain": 2, "double_circle": 3, "modified_double_chain": 3}[self.family]
            if self.k is None or self.k < low:
                raise ValueError(f"{self.family} needs k >= {low}")
        if self.odd_variant and self.family != "double_circle":
            raise ValueError("odd_variant only applies to double_circle")
        if self.seed is not None and not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")

    def to_dict(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v is not None}

    @property
    def size(self) -> int:
        if self.family in ("convex", "random"):
            return self.n
        return 2 * self.k + (1 if self.odd_variant else 0)


def convex_polygon(n: int) -> PointSet:
    """n points on the parabola y = x^2."""
    return PointSet.from_coords((x, x * x) for x in range(n))


def double_chain(k: int) -> PointSet:
    """Two facing chains of k points on y = x^2 + H and y = -(x^2 + H)."""
    h = 3 * k * k
    xs = [2 * j - (k - 1) for j in range(k)]
    upper = [(x, x * x + h) for x in xs]
    lower = [(x, -(x * x + h)) for x in xs]
    return PointSet.from_coords(lower + upper)


def double_circle(k: int, odd_variant: bool = False) -> PointSet:
    """Convex k-gon plus one interior point just inside each edge.

    Hull vertices are a regular k-gon of radius R rounded to the grid; each
    inner point is the edge midpoint pulled toward the centre by a small
    fraction of the sagitta between neighbouring edges.
    """
    r = 1 << 24
    outer = [(round(r * math.cos(2 * math.pi * i / k)), round(r * math.sin(2 * math.pi * i / k)))
             for i in range(k)]
    depth = r * (1 - math.cos(math.pi / k)) / (8 * k)
    pts = []
    for i in range(k):
        a, b = outer[i], outer[(i + 1) % k]
        mx, my = (a[0] + b[0]) / 2, (a[1] + b[1]) / 2
        dist = math.hypot(mx, my)
        pts.append(a)
        pts.append((round(mx - mx / dist * depth), round(my - my / dist * depth)))
    if odd_variant:
        # pulled in from vertex 0, nudged off the line through the centre
        ax, ay = outer[0]
        pts.append((round(ax - ax / r * 4 * depth - ay / r * depth),
                    round(ay - ay / r * 4 * depth + ax / r * depth)))
    return PointSet.from_coords(pts)


def modified_double_chain(k: int) -> PointSet:
    """Double chain of 2k - 2 points plus two points on its axis.

    The chains (i, +-(H + i + i^2)), i = 0..k-2, face each other across the
    x-axis.  Their far ends and Q = (-4H, 0) span the hull triangle; P = (-H, 0)
    cuts off the triangle at the near ends.  Each chain together with P and
    Q is a convex (k+1)-gon, and the region between the chains is a double
    chain polygon with n - 2 vertices.
    """
    m = k - 2
    h = 3 * k * k
    upper = [(i, h + i + i * i) for i in range(m + 1)]
    lower = [(x, -y) for x, y in upper]
    p = (-h, 0)
    q = (-4 * h, 0)
    return PointSet.from_coords(upper + lower + [p, q])


def random_points(n: int, seed: int) -> PointSet:
    """n uniform points in [0, 2^20)^2, redrawing any point that breaks general position.

    Uses Python's ``random.Random`` (MT19937) seeded with ``seed`` and
    ``getrandbits(20)`` per coordinate, x before y.
    """
    rng = random.Random(seed)
    pts: list[tuple[int, int]] = []
    while len(pts) < n:
        q = (rng.getrandbits(RANDOM_BOX_BITS), rng.getrandbits(RANDOM_BOX_BITS))
        if q in pts:
            continue
        if any(cross(pts[i], pts[j], q) == 0
               for i in range(len(pts)) for j in range(i + 1, len(pts))):
            continue
        pts.append(q)
    return PointSet.from_coords(pts)


def expected_hull(spec: FamilySpec) -> tuple[int, int] | None:
    """(b, v) for the family, or None when unconstrained."""
    k = spec.k
    if spec.family == "convex":
        return spec.n, 0
    if spec.family == "double_chain":
        return 4, 2 * k - 4
    if spec.family == "double_circle":
        return k, k + (1 if spec.odd_variant else 0)
    if spec.family == "modified_double_chain":
        return 3, 2 * k - 3
    return None


def closed_form(spec: FamilySpec) -> int | None:
    if spec.family == "convex":
        return formulas.catalan(spec.n - 2)
    if spec.family == "double_chain":
        return formulas.count_double_chain(spec.k)
    if spec.family == "double_circle" and not spec.odd_variant:
        return formulas.count_double_circle(spec.k)
    if spec.family == "modified_double_chain":
        return formulas.count_modified_double_chain(spec.k)
    return None


def build(spec: FamilySpec) -> PointSet:
    if spec.family == "convex":
        return convex_polygon(spec.n)
    if spec.family == "double_chain":
        return double_chain(spec.k)
    if spec.family == "double_circle":
        return double_circle(spec.k, spec.odd_variant)
    if spec.family == "modified_double_chain":
        return modified_double_chain(spec.k)
    return random_points(spec.n, spec.seed)


def certify(spec: FamilySpec, ps: PointSet, count: bool = True) -> dict:
    """Check a generated set; returns a record of every check that ran."""
    out: dict = {"spec": spec.to_dict()}
    bad = general_position_check(ps)
    out["general_position"] = bad is None
    if bad is not None:
        out["violating_triple"] = list(bad)
        out["ok"] = False
        return out
    hull = convex_hull(ps)
    out["b"], out["v"] = hull.b, hull.v
    want = expected_hull(spec)
    out["hull_ok"] = want is None or want == (hull.b, hull.v)
    formula = closed_form(spec)
    if formula is not None:
        out["closed_form"] = str(formula)
    if count and formula is not None and formula <= CERTIFY_MAX_COUNT:
        from .enumeration import enumerate_all

        got = enumerate_all(ps).count
        out["enumerated"] = str(got)
        out["count_ok"] = got == formula
    elif count and spec.family == "double_circle" and spec.odd_variant and ps.n <= 13:
        from .enumeration import enumerate_all

        out["enumerated"] = str(enumerate_all(ps).count)
    out["ok"] = out["hull_ok"] and out.get("count_ok", True)
    return out


def gen_family(spec: FamilySpec, certify_count: bool = False) -> PointSet:
    """Build the family's point set and certify it; raises GenerationFailed on a bad construction."""
    ps = build(spec)
    report = certify(spec, ps, count=certify_count)
    if not report["ok"]:
        raise GenerationFailed(f"{spec} failed certification: {report}")
    return ps
