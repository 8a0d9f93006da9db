from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tricount.geometry import (
    COORD_LIMIT,
    CollinearInput,
    GeometryError,
    Location,
    PointFileError,
    PointSet,
    convex_hull,
    cone_is_empty,
    format_point_text,
    general_position_check,
    orient,
    parse_point_text,
    point_in_triangle,
    read_point_file,
    segments_properly_cross,
    write_point_file,
)
from tricount.families import double_circle

from conftest import point_sets

coords = st.tuples(st.integers(-50, 50), st.integers(-50, 50))


def test_orient_examples():
    assert orient((0, 0), (1, 0), (0, 1)) == 1
    assert orient((0, 0), (1, 1), (2, 2)) == 0
    assert orient((0, 0), (0, 1), (1, 0)) == -1


def test_orient_at_coordinate_limit():
    L = COORD_LIMIT
    assert orient((-L, -L), (L, -L), (L, L)) == 1
    assert orient((-L, -L), (L, L), (L - 1, L)) == 1


@given(coords, coords, coords)
def test_orient_antisymmetric(a, b, c):
    s = orient(a, b, c)
    assert orient(b, a, c) == -s
    assert orient(a, c, b) == -s
    assert orient(c, b, a) == -s
    assert orient(b, c, a) == s


def test_crossing_examples():
    assert segments_properly_cross((0, 0), (2, 2), (0, 2), (2, 0))
    assert not segments_properly_cross((0, 0), (1, 0), (0, 1), (1, 1))
    assert not segments_properly_cross((0, 0), (1, 0), (1, 0), (2, 1))


@given(coords, coords, coords, coords)
def test_crossing_symmetric(a, b, c, d):
    x = segments_properly_cross(a, b, c, d)
    assert x == segments_properly_cross(b, a, c, d)
    assert x == segments_properly_cross(a, b, d, c)
    assert x == segments_properly_cross(c, d, a, b)


def test_point_in_triangle_examples():
    tri = ((0, 0), (3, 0), (0, 3))
    assert point_in_triangle((1, 1), *tri) is Location.STRICTLY_INSIDE
    assert point_in_triangle((5, 5), *tri) is Location.OUTSIDE
    assert point_in_triangle((1, 0), *tri) is Location.ON_BOUNDARY


def test_hull_examples():
    pent = PointSet.from_coords([(0, 0), (4, 0), (5, 3), (2, 5), (-1, 3)])
    h = convex_hull(pent)
    assert (h.b, h.v) == (5, 0)
    assert h.boundary == (4, 0, 1, 2, 3)
    h = convex_hull(PointSet.from_coords([(0, 0), (10, 0), (0, 10), (1, 1)]))
    assert (h.b, h.v) == (3, 1)
    assert h.interior == {3}
    h = convex_hull(double_circle(3))
    assert (h.b, h.v) == (3, 3)


@settings(max_examples=60)
@given(point_sets(3, 12))
def test_hull_properties(ps):
    h = convex_hull(ps)
    pts = ps.points
    bd = h.boundary
    assert set(bd) | h.interior == set(range(ps.n))
    assert bd[0] == min(range(ps.n), key=lambda i: pts[i])
    for i in range(len(bd)):
        assert orient(pts[bd[i - 2]], pts[bd[i - 1]], pts[bd[i]]) == 1
    for q in h.interior:
        assert any(point_in_triangle(pts[q], pts[bd[0]], pts[bd[j]], pts[bd[j + 1]])
                   is Location.STRICTLY_INSIDE for j in range(1, len(bd) - 1))


def test_general_position_examples():
    assert general_position_check(PointSet.from_coords([(0, 0), (1, 0), (2, 0), (0, 1)])) == (0, 1, 2)
    assert general_position_check(PointSet.from_coords([(0, 0), (1, 0), (1, 1), (0, 1)])) is None


def test_collinear_input_carries_triple():
    ps = PointSet.from_coords([(0, 1), (0, 0), (1, 0), (2, 0)])
    with pytest.raises(CollinearInput) as err:
        ps.require_general_position()
    assert err.value.triple == (1, 2, 3)


def test_pointset_invariants():
    with pytest.raises(GeometryError):
        PointSet.from_coords([(0, 0), (1, 0)])
    with pytest.raises(GeometryError):
        PointSet.from_coords([(0, 0), (1, 0), (0, 0)])
    with pytest.raises(GeometryError):
        PointSet.from_coords([(0, 0), (1, 0), (0, COORD_LIMIT + 1)])


def _strictly_inside_convex(q, poly):
    # rational barycentric test over a fan, independent of cross()
    q = tuple(map(Fraction, q))
    a = tuple(map(Fraction, poly[0]))
    for b, c in zip(poly[1:], poly[2:]):
        b = tuple(map(Fraction, b))
        c = tuple(map(Fraction, c))
        det = (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1])
        l1 = ((q[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (q[1] - a[1])) / det
        l2 = ((b[0] - a[0]) * (q[1] - a[1]) - (q[0] - a[0]) * (b[1] - a[1])) / det
        if l1 >= 0 and l2 >= 0 and l1 + l2 <= 1:
            return True
    return False


def test_cone_is_empty_examples():
    t = [(0, 0), (10, 0), (0, 10)]
    tp = [tuple(x) for x in t]
    ps = PointSet.from_coords(tp + [(2, 3)])
    assert cone_is_empty(ps.points[:3], ps.points[3], ps)
    ps = PointSet.from_coords(tp + [(2, 3), (3, 2)])
    assert not cone_is_empty(ps.points[:3], ps.points[3], ps)
    # q lies outside t but inside conv(t + p)
    ps = PointSet.from_coords(tp + [(20, 20), (8, 8)])
    assert point_in_triangle((8, 8), *t) is Location.OUTSIDE
    assert _strictly_inside_convex((8, 8), [(0, 0), (10, 0), (20, 20), (0, 10)])
    assert not cone_is_empty(ps.points[:3], ps.points[3], ps)


def test_cone_is_empty_vertex_case():
    ps = PointSet.from_coords([(0, 0), (10, 0), (0, 10)])
    assert cone_is_empty(ps.points, ps.points[0], ps)


def test_point_file_roundtrip(tmp_path):
    ps = PointSet.from_coords([(0, 0), (-5, 7), (3, -2)])
    path = tmp_path / "a.pts"
    write_point_file(ps, path, ["three points"])
    text = path.read_text()
    assert text.startswith("# three points\n3\n")
    assert read_point_file(path) == ps
    assert parse_point_text(format_point_text(ps)) == ps


@pytest.mark.parametrize("text", [
    "", "2\n0 0\n", "3\n0 0\n1 1\n", "3\n0 0\n1\n2 2\n", "x\n", "3\n0 0\n1 a\n2 3\n",
])
def test_point_file_errors(text):
    with pytest.raises(GeometryError):
        parse_point_text(text)


def test_point_file_comments():
    ps = parse_point_text("# header\n3\n# mid\n0 0\n1 0\n0 1\n")
    assert ps.n == 3
    assert issubclass(PointFileError, GeometryError)
