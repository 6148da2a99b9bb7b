"""Ruler-and-compass primitives over a numeric Backend.

All objects are immutable values. Lines are stored normalized
(a*x + b*y + c = 0 with a^2 + b^2 = 1 and (a, b) lexicographically positive),
so two constructions of the same line compare equal up to eps.
Two-valued intersections come back in lexicographic (x, y) order; choosing
"the other point" is the engine's job, never the ordering's.
"""
from dataclasses import dataclass
from typing import Union

from .scalar import AngleDeg, Backend, Scalar

TWO = "two"
TANGENT = "tangent"
NONE = "none"

CCW = "ccw"
CW = "cw"


class GeometryError(ValueError):
    """Base class for ruler-and-compass failures."""


class CoincidentPoints(GeometryError):
    pass


class DegenerateAngle(GeometryError):
    pass


class AmbiguousBisector(GeometryError):
    pass


class ParallelLines(GeometryError):
    pass


class CoincidentLines(GeometryError):
    pass


class ConcentricCircles(GeometryError):
    pass


class DegenerateCircle(GeometryError):
    pass


@dataclass(frozen=True)
class Point:
    x: Scalar
    y: Scalar


@dataclass(frozen=True)
class Line:
    a: Scalar
    b: Scalar
    c: Scalar


@dataclass(frozen=True)
class Circle:
    center: Point
    r: Scalar


@dataclass(frozen=True)
class Ray:
    origin: Point
    dx: Scalar
    dy: Scalar


@dataclass(frozen=True)
class Intersection:
    kind: str
    points: tuple[Point, ...]

    @property
    def is_two(self) -> bool:
        return self.kind == TWO


Linear = Union[Line, Ray]
Shape = Union[Point, Line, Ray, Circle]


def dist(bk: Backend, p: Point, q: Point) -> Scalar:
    return bk.hypot(q.x - p.x, q.y - p.y)


def coincide(bk: Backend, p: Point, q: Point) -> bool:
    return dist(bk, p, q) <= bk.eps


def orientation(p: Point, q: Point, r: Point) -> Scalar:
    """Twice the signed area of pqr: positive when p -> q -> r turns counter-clockwise."""
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def point_in_triangle(bk: Backend, p: Point, a: Point, b: Point, c: Point) -> bool:
    """Strictly inside triangle abc (points within eps of an edge count as outside)."""
    s1 = orientation(a, b, p)
    s2 = orientation(b, c, p)
    s3 = orientation(c, a, p)
    eps = bk.eps
    return (s1 > eps and s2 > eps and s3 > eps) or (s1 < -eps and s2 < -eps and s3 < -eps)


def _normalized(bk: Backend, a: Scalar, b: Scalar, c: Scalar) -> Line:
    n = bk.hypot(a, b)
    a, b, c = a / n, b / n, c / n
    # (a, b) lexicographically positive; |a| <= eps counts as zero
    if a < -bk.eps or (abs(a) <= bk.eps and b < 0):
        a, b, c = -a, -b, -c
    return Line(a, b, c)


def line_residual(line: Line, p: Point) -> Scalar:
    """Signed distance of p from a normalized line."""
    return line.a * p.x + line.b * p.y + line.c


def as_line(bk: Backend, obj: Linear) -> Line:
    """Rays take part in intersections as their full supporting line."""
    if isinstance(obj, Line):
        return obj
    o = obj.origin
    a, b = -obj.dy, obj.dx
    return _normalized(bk, a, b, -(a * o.x + b * o.y))


def line_through(bk: Backend, p: Point, q: Point) -> Line:
    if dist(bk, p, q) <= bk.eps:
        raise CoincidentPoints(f"cannot draw a line through coincident points {p} and {q}")
    a = -(q.y - p.y)
    b = q.x - p.x
    return _normalized(bk, a, b, -(a * p.x + b * p.y))


def midpoint(bk: Backend, p: Point, q: Point) -> Point:
    return Point((p.x + q.x) / 2, (p.y + q.y) / 2)


def perpendicular_bisector(bk: Backend, p: Point, q: Point) -> Line:
    if dist(bk, p, q) <= bk.eps:
        raise CoincidentPoints(f"perpendicular bisector of coincident points {p} and {q}")
    m = midpoint(bk, p, q)
    a = q.x - p.x
    b = q.y - p.y
    return _normalized(bk, a, b, -(a * m.x + b * m.y))


def perpendicular_at(bk: Backend, line: Linear, p: Point) -> Line:
    """Perpendicular to `line` through p; p need not lie on the line."""
    line = as_line(bk, line)
    a, b = line.b, -line.a
    return _normalized(bk, a, b, -(a * p.x + b * p.y))


def _unit(bk: Backend, vertex: Point, p: Point) -> tuple[Scalar, Scalar]:
    dx, dy = p.x - vertex.x, p.y - vertex.y
    n = bk.hypot(dx, dy)
    if n <= bk.eps:
        raise DegenerateAngle(f"arm point {p} coincides with vertex {vertex}")
    return dx / n, dy / n


def angle_bisector(bk: Backend, vertex: Point, arm1: Point, arm2: Point) -> Ray:
    """Interior bisector of the angle arm1-vertex-arm2."""
    u1 = _unit(bk, vertex, arm1)
    u2 = _unit(bk, vertex, arm2)
    sx, sy = u1[0] + u2[0], u1[1] + u2[1]
    n = bk.hypot(sx, sy)
    if n <= bk.eps:
        raise AmbiguousBisector(f"straight angle at {vertex} has no unique interior bisector")
    return Ray(vertex, sx / n, sy / n)


def ray_from_angle(bk: Backend, origin: Point, base: Point, deg: AngleDeg, side: str) -> Ray:
    """Ray from origin making `deg` degrees with origin->base, turned ccw or cw."""
    ux, uy = _unit(bk, origin, base)
    if side not in (CCW, CW):
        raise ValueError(f"side must be {CCW!r} or {CW!r}, got {side!r}")
    t = bk.deg_to_rad(deg)
    if side == CW:
        t = -t
    c, s = bk.cos(t), bk.sin(t)
    return Ray(origin, ux * c - uy * s, ux * s + uy * c)


def circle(bk: Backend, center: Point, r: Scalar) -> Circle:
    if r <= bk.eps:
        raise DegenerateCircle(f"circle at {center} needs a positive radius, got {r}")
    return Circle(center, r)


def _ordered(points: list[Point]) -> tuple[Point, ...]:
    return tuple(sorted(points, key=lambda p: (p.x, p.y)))


def intersect_line_line(bk: Backend, l1: Linear, l2: Linear) -> Point:
    l1, l2 = as_line(bk, l1), as_line(bk, l2)
    det = l1.a * l2.b - l2.a * l1.b
    if abs(det) <= bk.eps:
        if abs(l1.c - l2.c) <= bk.eps:
            raise CoincidentLines("lines coincide; intersection is not a point")
        raise ParallelLines("lines are parallel")
    x = (l1.b * l2.c - l2.b * l1.c) / det
    y = (l1.c * l2.a - l2.c * l1.a) / det
    return Point(x, y)


def intersect_line_circle(bk: Backend, line: Linear, c: Circle) -> Intersection:
    line = as_line(bk, line)
    d = line_residual(line, c.center)
    foot = Point(c.center.x - d * line.a, c.center.y - d * line.b)
    gap = abs(d) - c.r
    if gap > bk.eps:
        return Intersection(NONE, ())
    if abs(gap) <= bk.eps:
        return Intersection(TANGENT, (foot,))
    h = bk.sqrt(c.r * c.r - d * d)
    tx, ty = -line.b, line.a
    return Intersection(TWO, _ordered([
        Point(foot.x + h * tx, foot.y + h * ty),
        Point(foot.x - h * tx, foot.y - h * ty),
    ]))


def intersect_circle_circle(bk: Backend, c1: Circle, c2: Circle) -> Intersection:
    dx = c2.center.x - c1.center.x
    dy = c2.center.y - c1.center.y
    d = bk.hypot(dx, dy)
    if d <= bk.eps:
        raise ConcentricCircles(f"circles share the center {c1.center}")
    outer = d - (c1.r + c2.r)
    inner = abs(c1.r - c2.r) - d
    if outer > bk.eps or inner > bk.eps:
        return Intersection(NONE, ())
    # distance from c1's center to the radical line, along the center line
    a = (d * d + c1.r * c1.r - c2.r * c2.r) / (2 * d)
    ux, uy = dx / d, dy / d
    base = Point(c1.center.x + a * ux, c1.center.y + a * uy)
    if abs(outer) <= bk.eps or abs(inner) <= bk.eps:
        return Intersection(TANGENT, (base,))
    h = bk.sqrt(c1.r * c1.r - a * a)
    return Intersection(TWO, _ordered([
        Point(base.x - h * uy, base.y + h * ux),
        Point(base.x + h * uy, base.y - h * ux),
    ]))


def angle_at(bk: Backend, vertex: Point, p: Point, q: Point) -> AngleDeg:
    """Undirected angle p-vertex-q in degrees, in [0, 180]."""
    ux, uy = _unit(bk, vertex, p)
    vx, vy = _unit(bk, vertex, q)
    cross = ux * vy - uy * vx
    dot = ux * vx + uy * vy
    return bk.rad_to_deg(bk.atan2(abs(cross), dot))
