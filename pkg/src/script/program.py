"""ConstructionProgram: a straight-line ruler-and-compass procedure as data."""
from dataclasses import dataclass, field

# statement / object kinds
POINT = "point"
LINE = "line"
CIRCLE = "circle"
OBJECT_KINDS = (POINT, LINE, CIRCLE)

# parameter kinds
ANGLE = "angle"
LENGTH = "length"
PARAM_KINDS = (ANGLE, LENGTH)

# pick hints
CLOSEST_TO = "closest_to"
FARTHEST_FROM = "farthest_from"
DISTINCT_FROM = "distinct_from"
UPPER = "upper"
LOWER = "lower"
REF_HINTS = (CLOSEST_TO, FARTHEST_FROM, DISTINCT_FROM)
BARE_HINTS = (UPPER, LOWER)

COORD = "coord"
SIDES = ("ccw", "cw")

# argument slots used in operation signatures
ARG_POINT = "point"
ARG_LINE = "line"
ARG_CIRCLE = "circle"
ARG_ANGLE = "angle"
ARG_RADIUS = "radius"
ARG_SIDE = "side"
ARG_CURVE = "curve"  # line or circle, for the generic intersect


@dataclass(frozen=True)
class OpSpec:
    args: tuple[str, ...]
    result: str
    two_valued: bool = False


OPS: dict[str, OpSpec] = {
    "line_through": OpSpec((ARG_POINT, ARG_POINT), LINE),
    "midpoint": OpSpec((ARG_POINT, ARG_POINT), POINT),
    "perpendicular_bisector": OpSpec((ARG_POINT, ARG_POINT), LINE),
    "perpendicular_at": OpSpec((ARG_LINE, ARG_POINT), LINE),
    "angle_bisector": OpSpec((ARG_POINT, ARG_POINT, ARG_POINT), LINE),
    "ray_from_angle": OpSpec((ARG_POINT, ARG_POINT, ARG_ANGLE, ARG_SIDE), LINE),
    "circle": OpSpec((ARG_POINT, ARG_RADIUS), CIRCLE),
    "intersect": OpSpec((ARG_CURVE, ARG_CURVE), POINT),
    "intersect_line_line": OpSpec((ARG_LINE, ARG_LINE), POINT),
    "intersect_line_circle": OpSpec((ARG_LINE, ARG_CIRCLE), POINT, two_valued=True),
    "intersect_circle_circle": OpSpec((ARG_CIRCLE, ARG_CIRCLE), POINT, two_valued=True),
}


@dataclass(frozen=True)
class Ref:
    name: str


@dataclass(frozen=True)
class Num:
    text: str


@dataclass(frozen=True)
class Word:
    text: str


@dataclass(frozen=True)
class Dist:
    p: str
    q: str


Arg = Ref | Num | Word | Dist


@dataclass(frozen=True)
class Param:
    name: str
    kind: str


@dataclass(frozen=True)
class PickHint:
    kind: str
    ref: str | None = None


@dataclass(frozen=True)
class Step:
    kind: str
    name: str
    op: str
    args: tuple[Arg, ...]
    pick: PickHint | None = None
    optional: bool = False
    line: int = field(default=0, compare=False)

    def references(self) -> list[str]:
        """Every name this step reads: identifier args, dist() endpoints and the pick reference."""
        names = []
        for arg in self.args:
            if isinstance(arg, Ref):
                names.append(arg.name)
            elif isinstance(arg, Dist):
                names.extend([arg.p, arg.q])
        if self.pick is not None and self.pick.ref is not None:
            names.append(self.pick.ref)
        return names


@dataclass(frozen=True)
class ConstructionProgram:
    params: tuple[Param, ...]
    steps: tuple[Step, ...]
    exports: tuple[str, ...]
    name: str = field(default="<program>", compare=False)

    def param_names(self) -> list[str]:
        return [p.name for p in self.params]

    def step_named(self, name: str) -> Step | None:
        for step in self.steps:
            if step.name == name:
                return step
        return None


@dataclass(frozen=True)
class ScriptSource:
    text: str
    name: str = "<script>"
