"""Straight-line interpreter for ConstructionPrograms."""
from collections.abc import Mapping
from typing import Any

from ..kernel import geom
from ..kernel.geom import Circle, GeometryError, Intersection, Line, Point, Ray
from ..kernel.scalar import AngleDeg, Backend
from ..script.program import (
    CLOSEST_TO,
    COORD,
    DISTINCT_FROM,
    FARTHEST_FROM,
    LOWER,
    UPPER,
    ConstructionProgram,
    Dist,
    Num,
    PickHint,
    Ref,
    Step,
    Word,
)
from .environment import Environment, Trace, TraceEntry
from .errors import (
    AmbiguousPick,
    DegenerateConstruction,
    ExecutionError,
    NotAPoint,
    StepFailed,
    UnboundParameter,
    UnknownName,
)

Bindings = Mapping[str, Any]

_LINEAR = (Line, Ray)

_SIMPLE_OPS = {
    "line_through": geom.line_through,
    "midpoint": geom.midpoint,
    "perpendicular_bisector": geom.perpendicular_bisector,
    "perpendicular_at": geom.perpendicular_at,
    "angle_bisector": geom.angle_bisector,
    "ray_from_angle": geom.ray_from_angle,
    "circle": geom.circle,
}

_INTERSECT_OPS = frozenset({"intersect", "intersect_line_line", "intersect_line_circle", "intersect_circle_circle"})


def _bind_params(program: ConstructionProgram, bindings: Bindings, bk: Backend) -> dict[str, Any]:
    declared = program.param_names()
    for name in bindings:
        if name not in declared:
            raise UnknownName(f"binding for {name!r}, which is not a parameter of {program.name}")
    values = {}
    for name in declared:
        if name not in bindings:
            raise UnboundParameter(f"parameter {name!r} of {program.name} has no binding")
        values[name] = bk.num(bindings[name])
    return values


def _resolve(arg, objects: dict, params: dict, bk: Backend):
    if isinstance(arg, Ref):
        if arg.name in params:
            return params[arg.name]
        return objects[arg.name]
    if isinstance(arg, Num):
        return bk.num(arg.text)
    if isinstance(arg, Word):
        return arg.text
    if isinstance(arg, Dist):
        return geom.dist(bk, objects[arg.p], objects[arg.q])
    raise TypeError(f"unsupported argument {arg!r}")


def _intersect(bk: Backend, x, y) -> Point | Intersection:
    if isinstance(x, _LINEAR) and isinstance(y, _LINEAR):
        return geom.intersect_line_line(bk, x, y)
    if isinstance(x, _LINEAR) and isinstance(y, Circle):
        return geom.intersect_line_circle(bk, x, y)
    if isinstance(x, Circle) and isinstance(y, _LINEAR):
        return geom.intersect_line_circle(bk, y, x)
    return geom.intersect_circle_circle(bk, x, y)


def _pick(bk: Backend, hint: PickHint, candidates: tuple[Point, ...], objects: dict) -> Point:
    p0, p1 = candidates
    eps = bk.eps
    if hint.kind in (CLOSEST_TO, FARTHEST_FROM):
        ref = objects[hint.ref]
        d0, d1 = geom.dist(bk, p0, ref), geom.dist(bk, p1, ref)
        if abs(d0 - d1) <= eps:
            raise AmbiguousPick(f"both candidates are equidistant from {hint.ref}")
        nearer, farther = (p0, p1) if d0 < d1 else (p1, p0)
        return nearer if hint.kind == CLOSEST_TO else farther
    if hint.kind == DISTINCT_FROM:
        ref = objects[hint.ref]
        kept = [p for p in candidates if not geom.coincide(bk, p, ref)]
        if len(kept) != 1:
            raise AmbiguousPick(f"distinct_from({hint.ref}) leaves {len(kept)} candidates")
        return kept[0]
    if hint.kind in (UPPER, LOWER):
        if abs(p0.y - p1.y) > eps:
            hi, lo = (p0, p1) if p0.y > p1.y else (p1, p0)
        elif abs(p0.x - p1.x) > eps:
            hi, lo = (p0, p1) if p0.x > p1.x else (p1, p0)
        else:
            raise AmbiguousPick("candidates coincide")
        return hi if hint.kind == UPPER else lo
    raise ValueError(f"unknown pick hint {hint.kind!r}")


def _evaluate(step: Step, inputs: tuple, objects: dict, bk: Backend) -> tuple[Any, tuple[Point, ...]]:
    """Run one step; returns the produced object and, for two-valued steps, both candidates."""
    if step.op == COORD:
        return Point(*inputs), ()
    if step.op in _SIMPLE_OPS:
        return _SIMPLE_OPS[step.op](bk, *inputs), ()
    if step.op not in _INTERSECT_OPS:
        raise ValueError(f"unknown operation {step.op!r}")
    result = _intersect(bk, *inputs)
    if isinstance(result, Point):
        return result, ()
    if not result.is_two:
        raise DegenerateConstruction(f"{step.op} is {result.kind} where two points are required")
    chosen = _pick(bk, step.pick, result.points, objects)
    for name, obj in objects.items():
        if isinstance(obj, Point) and geom.coincide(bk, chosen, obj):
            raise DegenerateConstruction(f"picked point collapses onto existing point {name}")
    return chosen, result.points


def execute(program: ConstructionProgram, bindings: Bindings, backend: Backend) -> tuple[Environment, Trace]:
    """
    Execute every step in order. Failures are raised with the failing step's index,
    except on steps marked optional, which are traced with no produced object and left unbound.
    """
    params = _bind_params(program, bindings, backend)
    objects: dict[str, Any] = {}
    trace: list[TraceEntry] = []
    for index, step in enumerate(program.steps):
        try:
            inputs = tuple(_resolve(arg, objects, params, backend) for arg in step.args)
            produced, candidates = _evaluate(step, inputs, objects, backend)
        except (GeometryError, AmbiguousPick, DegenerateConstruction) as e:
            if step.optional:
                trace.append(TraceEntry(index, step, (), None))
                continue
            if isinstance(e, GeometryError):
                raise StepFailed(e, step_index=index, step_name=step.name) from e
            raise type(e)(str(e), step_index=index, step_name=step.name) from e
        objects[step.name] = produced
        trace.append(TraceEntry(index, step, inputs, produced, candidates))
    return Environment(objects, backend, program.exports), tuple(trace)


def _point(env: Environment, name: str) -> Point:
    if name not in env:
        raise UnknownName(f"{name!r} is not bound in this environment")
    obj = env[name]
    if not isinstance(obj, Point):
        raise NotAPoint(f"{name!r} is a {type(obj).__name__}, not a point")
    return obj


def measure_angle(env: Environment, vertex: str, p: str, q: str) -> AngleDeg:
    """Undirected angle p-vertex-q in degrees, measured on the environment's backend."""
    return geom.angle_at(env.backend, _point(env, vertex), _point(env, p), _point(env, q))


def measure_length(env: Environment, p: str, q: str):
    return geom.dist(env.backend, _point(env, p), _point(env, q))


__all__ = ["Bindings", "ExecutionError", "execute", "measure_angle", "measure_length"]
