"""Tests for the ruler-and-compass primitives."""
import math

import pytest
from hypothesis import assume, given, strategies as st

from src.kernel import geom
from src.kernel.geom import Circle, Line, Point
from src.kernel.scalar import make_backend

BK = make_backend("machine")

coord = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False, allow_subnormal=False)
points = st.builds(Point, coord, coord)
radii = st.floats(min_value=0.1, max_value=10, allow_nan=False, allow_infinity=False)


def test_line_through_is_normalized():
    assert geom.line_through(BK, Point(0.0, 0.0), Point(1.0, 0.0)) == Line(0.0, 1.0, 0.0)
    assert geom.line_through(BK, Point(0.0, 0.0), Point(0.0, 1.0)) == Line(1.0, 0.0, 0.0)


def test_perpendicular_bisector_of_unit_segment():
    assert geom.perpendicular_bisector(BK, Point(0.0, 0.0), Point(1.0, 0.0)) == Line(1.0, 0.0, -0.5)


def test_midpoint():
    assert geom.midpoint(BK, Point(-2.0, 0.0), Point(0.0, 4.0)) == Point(-1.0, 2.0)


def test_perpendicular_at_point_off_the_line():
    ab = geom.line_through(BK, Point(0.0, 0.0), Point(1.0, 0.0))
    perp = geom.perpendicular_at(BK, ab, Point(0.5, 3.0))
    foot = geom.intersect_line_line(BK, ab, perp)
    assert foot.x == pytest.approx(0.5)
    assert foot.y == pytest.approx(0.0, abs=1e-15)


def test_unit_circles_intersect_in_lexicographic_order():
    c1 = geom.circle(BK, Point(0.0, 0.0), 1.0)
    c2 = geom.circle(BK, Point(1.0, 0.0), 1.0)
    hit = geom.intersect_circle_circle(BK, c1, c2)
    assert hit.kind == geom.TWO
    lower, upper = hit.points
    assert lower.x == pytest.approx(0.5) and upper.x == pytest.approx(0.5)
    assert lower.y == pytest.approx(-math.sqrt(3) / 2)
    assert upper.y == pytest.approx(math.sqrt(3) / 2)


def test_tangent_and_missing_line_circle():
    unit = geom.circle(BK, Point(0.0, 0.0), 1.0)
    y1 = geom.line_through(BK, Point(-1.0, 1.0), Point(1.0, 1.0))
    y2 = geom.line_through(BK, Point(-1.0, 2.0), Point(1.0, 2.0))
    tangent = geom.intersect_line_circle(BK, y1, unit)
    assert tangent.kind == geom.TANGENT
    assert tangent.points[0].x == pytest.approx(0.0, abs=1e-15)
    assert tangent.points[0].y == pytest.approx(1.0)
    assert geom.intersect_line_circle(BK, y2, unit).kind == geom.NONE


def test_tangent_circles():
    c1 = geom.circle(BK, Point(0.0, 0.0), 1.0)
    c2 = geom.circle(BK, Point(2.0, 0.0), 1.0)
    hit = geom.intersect_circle_circle(BK, c1, c2)
    assert hit.kind == geom.TANGENT
    assert hit.points[0] == Point(1.0, 0.0)


def test_parallel_and_coincident_lines():
    l1 = geom.line_through(BK, Point(0.0, 0.0), Point(1.0, 0.0))
    l2 = geom.line_through(BK, Point(0.0, 1.0), Point(1.0, 1.0))
    l3 = geom.line_through(BK, Point(2.0, 0.0), Point(5.0, 0.0))
    with pytest.raises(geom.ParallelLines):
        geom.intersect_line_line(BK, l1, l2)
    with pytest.raises(geom.CoincidentLines):
        geom.intersect_line_line(BK, l1, l3)


def test_error_paths():
    a = Point(0.0, 0.0)
    with pytest.raises(geom.CoincidentPoints):
        geom.line_through(BK, a, Point(0.0, 1e-12))
    with pytest.raises(geom.DegenerateAngle):
        geom.angle_at(BK, a, a, Point(1.0, 0.0))
    with pytest.raises(geom.AmbiguousBisector):
        geom.angle_bisector(BK, a, Point(1.0, 0.0), Point(-1.0, 0.0))
    with pytest.raises(geom.DegenerateCircle):
        geom.circle(BK, a, 0.0)
    with pytest.raises(geom.ConcentricCircles):
        geom.intersect_circle_circle(BK, Circle(a, 1.0), Circle(a, 2.0))


def test_angle_at_examples():
    v = Point(0.0, 0.0)
    assert geom.angle_at(BK, v, Point(1.0, 0.0), Point(0.0, 1.0)) == pytest.approx(90.0)
    assert geom.angle_at(BK, v, Point(1.0, 0.0), Point(-1.0, 0.0)) == pytest.approx(180.0)
    assert geom.angle_at(BK, v, Point(1.0, 0.0), Point(2.0, 0.0)) == 0.0


def test_ray_from_angle_sides():
    o, b = Point(0.0, 0.0), Point(1.0, 0.0)
    up = geom.ray_from_angle(BK, o, b, 30.0, geom.CCW)
    down = geom.ray_from_angle(BK, o, b, 30.0, geom.CW)
    assert up.dy > 0 > down.dy
    assert up.dx == pytest.approx(math.cos(math.radians(30)))


def test_point_in_triangle_is_strict():
    a, b, c = Point(0.0, 0.0), Point(1.0, 0.0), Point(0.0, 1.0)
    assert geom.point_in_triangle(BK, Point(0.2, 0.2), a, b, c)
    assert not geom.point_in_triangle(BK, Point(0.5, 0.0), a, b, c)
    assert not geom.point_in_triangle(BK, Point(1.0, 1.0), a, b, c)


@given(points, points)
def test_line_through_contains_both_points(p, q):
    assume(geom.dist(BK, p, q) > 0.1)
    line = geom.line_through(BK, p, q)
    assert line.a ** 2 + line.b ** 2 == pytest.approx(1.0, abs=1e-12)
    assert abs(geom.line_residual(line, p)) <= BK.eps
    assert abs(geom.line_residual(line, q)) <= BK.eps


@given(points, points)
def test_line_normalization_ignores_point_order(p, q):
    assume(abs(p.y - q.y) > 0.01)
    l1 = geom.line_through(BK, p, q)
    l2 = geom.line_through(BK, q, p)
    assert l1.a == pytest.approx(l2.a, abs=1e-12)
    assert l1.b == pytest.approx(l2.b, abs=1e-12)
    assert l1.c == pytest.approx(l2.c, abs=1e-12)


@given(points, points, points)
def test_lines_through_common_point_meet_there(p, q, r):
    assume(geom.dist(BK, p, q) > 0.5 and geom.dist(BK, p, r) > 0.5)
    assume(abs(geom.orientation(p, q, r)) > 0.5)
    hit = geom.intersect_line_line(BK, geom.line_through(BK, p, q), geom.line_through(BK, p, r))
    assert geom.dist(BK, hit, p) < 1e-9


@given(points, radii, points, radii)
def test_circle_intersections_lie_on_both_circles(c1, r1, c2, r2):
    d = geom.dist(BK, c1, c2)
    assume(d > 0.1)
    assume(abs(r1 - r2) + 0.01 < d < r1 + r2 - 0.01)
    hit = geom.intersect_circle_circle(BK, Circle(c1, r1), Circle(c2, r2))
    assert hit.kind == geom.TWO
    for p in hit.points:
        assert abs(geom.dist(BK, p, c1) - r1) < 1e-9
        assert abs(geom.dist(BK, p, c2) - r2) < 1e-9
    first, second = hit.points
    assert (first.x, first.y) <= (second.x, second.y)


@given(points, points, points)
def test_angle_is_undirected_and_bounded(v, p, q):
    assume(geom.dist(BK, v, p) > 0.1 and geom.dist(BK, v, q) > 0.1)
    a = geom.angle_at(BK, v, p, q)
    assert 0 <= a <= 180
    assert a == pytest.approx(geom.angle_at(BK, v, q, p), abs=1e-12)


@given(points, points, st.floats(min_value=1, max_value=179))
def test_ray_from_angle_places_the_angle(o, b, deg):
    assume(geom.dist(BK, o, b) > 0.1)
    ray = geom.ray_from_angle(BK, o, b, deg, geom.CCW)
    tip = Point(o.x + ray.dx, o.y + ray.dy)
    assert geom.angle_at(BK, o, b, tip) == pytest.approx(deg, abs=1e-9)
    assert geom.orientation(o, b, tip) > 0


@given(points, points, points)
def test_bisector_splits_the_angle_equally(v, p, q):
    assume(geom.dist(BK, v, p) > 0.1 and geom.dist(BK, v, q) > 0.1)
    whole = geom.angle_at(BK, v, p, q)
    assume(1 < whole < 179)
    ray = geom.angle_bisector(BK, v, p, q)
    tip = Point(v.x + ray.dx, v.y + ray.dy)
    assert geom.angle_at(BK, v, p, tip) == pytest.approx(whole / 2, abs=1e-9)
    assert geom.angle_at(BK, v, q, tip) == pytest.approx(whole / 2, abs=1e-9)


@given(points, points)
def test_perpendicular_bisector_is_the_perpendicular_at_the_midpoint(p, q):
    assume(abs(q.x - p.x) > 0.01 and geom.dist(BK, p, q) > 0.1)
    bisector = geom.perpendicular_bisector(BK, p, q)
    rebuilt = geom.perpendicular_at(BK, geom.line_through(BK, p, q), geom.midpoint(BK, p, q))
    assert bisector.a == pytest.approx(rebuilt.a, abs=1e-9)
    assert bisector.b == pytest.approx(rebuilt.b, abs=1e-9)
    assert bisector.c == pytest.approx(rebuilt.c, abs=1e-9)


@given(points, radii, points, radii)
def test_circle_intersection_does_not_depend_on_argument_order(c1, r1, c2, r2):
    d = geom.dist(BK, c1, c2)
    assume(d > 0.1)
    assume(abs(d - (r1 + r2)) > 0.01 and abs(abs(r1 - r2) - d) > 0.01)
    one = geom.intersect_circle_circle(BK, Circle(c1, r1), Circle(c2, r2))
    two = geom.intersect_circle_circle(BK, Circle(c2, r2), Circle(c1, r1))
    assert one.kind == two.kind
    assert len(one.points) == len(two.points)
    for p in one.points:
        assert min(geom.dist(BK, p, q) for q in two.points) < 1e-9


@given(
    points,
    points,
    points,
    st.floats(min_value=0, max_value=360),
    st.floats(min_value=0.5, max_value=5),
    coord,
    coord,
    st.booleans(),
)
def test_angle_is_invariant_under_rigid_motion_and_scaling(v, p, q, turn, scale, tx, ty, mirror):
    assume(geom.dist(BK, v, p) > 0.1 and geom.dist(BK, v, q) > 0.1)
    c, s = math.cos(math.radians(turn)), math.sin(math.radians(turn))

    def move(pt):
        y = -pt.y if mirror else pt.y
        return Point(scale * (c * pt.x - s * y) + tx, scale * (s * pt.x + c * y) + ty)

    before = geom.angle_at(BK, v, p, q)
    after = geom.angle_at(BK, move(v), move(p), move(q))
    assert after == pytest.approx(before, abs=1e-8)


@given(points, points, points, radii)
def test_line_circle_points_lie_on_both(p, q, center, r):
    assume(geom.dist(BK, p, q) > 0.1)
    line = geom.line_through(BK, p, q)
    assume(abs(geom.line_residual(line, center)) < r - 0.01)
    hit = geom.intersect_line_circle(BK, line, Circle(center, r))
    assert hit.kind == geom.TWO
    for pt in hit.points:
        assert abs(geom.line_residual(line, pt)) <= 10 * BK.eps
        assert abs(geom.dist(BK, pt, center) - r) <= 10 * BK.eps
