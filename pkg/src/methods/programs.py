"""The three trisection constructions as built-in ConstructionPrograms.

Each mirrors a shipped script in constructions/; the test suite checks the two agree.
Helper names (AB, rA, c1, ...) are construction lines and circles; exports are the figure's points.
"""
from functools import lru_cache

from ..script.program import (
    ANGLE,
    CIRCLE,
    COORD,
    LINE,
    POINT,
    ConstructionProgram,
    Dist,
    Num,
    Param,
    PickHint,
    Ref,
    Step,
    Word,
)
from .ids import MethodId


def _args(*items):
    out = []
    for item in items:
        if isinstance(item, (Dist, Word, Num, Ref)):
            out.append(item)
        else:
            out.append(Ref(item))
    return tuple(out)


def _coord(name: str, x: str, y: str) -> Step:
    return Step(POINT, name, COORD, (Num(x), Num(y)))


def _point(name, op, *args, pick=None, ref=None, optional=False) -> Step:
    hint = PickHint(pick, ref) if pick else None
    return Step(POINT, name, op, _args(*args), hint, optional)


def _line(name, op, *args) -> Step:
    return Step(LINE, name, op, _args(*args))


def _circle(name, center, p, q) -> Step:
    return Step(CIRCLE, name, "circle", (Ref(center), Dist(p, q)))


def _method1() -> ConstructionProgram:
    steps = (
        # segment AB of unit length and its midpoint C
        _coord("A", "0", "0"),
        _coord("B", "1", "0"),
        _line("AB", "line_through", "A", "B"),
        _line("pAB", "perpendicular_bisector", "A", "B"),
        _point("C", "intersect", "AB", "pAB"),
        # isosceles triangle ABD with theta at both base angles
        _line("rA", "ray_from_angle", "A", "B", "theta", Word("ccw")),
        _line("rB", "ray_from_angle", "B", "A", "theta", Word("cw")),
        _point("D", "intersect", "rA", "rB"),
        # bisect DAB, meet BD at E, erect the perpendicular at E
        _line("bA", "angle_bisector", "A", "D", "C"),
        _line("BD", "line_through", "B", "D"),
        _point("E", "intersect", "bA", "BD"),
        _line("AE", "line_through", "A", "E"),
        _line("pE", "perpendicular_at", "AE", "E"),
        _point("G", "intersect", "pE", "AB"),
        _line("AD", "line_through", "A", "D"),
        _point("F", "intersect", "pE", "AD"),
        # equilateral triangle HAB
        _circle("cA", "A", "A", "B"),
        _circle("cB", "B", "B", "A"),
        _point("H", "intersect", "cA", "cB", pick="upper"),
        _line("HA", "line_through", "H", "A"),
        _line("HB", "line_through", "H", "B"),
    )
    return ConstructionProgram(
        params=(Param("theta", ANGLE),),
        steps=steps,
        exports=("A", "B", "C", "D", "E", "F", "G", "H"),
        name="method1",
    )


def _method2() -> ConstructionProgram:
    steps = (
        _coord("A", "0", "0"),
        _coord("B", "1", "0"),
        # given angle BAC with C on the unit circle about A
        _line("rA", "ray_from_angle", "A", "B", "theta", Word("ccw")),
        _circle("cU", "A", "A", "B"),
        _point("C", "intersect", "rA", "cU", pick="upper"),
        # circle 1 on diameter AB
        _point("D", "midpoint", "A", "B"),
        _circle("c1", "D", "D", "A"),
        _line("AC", "line_through", "A", "C"),
        _point("E", "intersect", "AC", "c1", pick="distinct_from", ref="A"),
        # equal chords AE = EF = FG
        _circle("c2", "E", "E", "A"),
        _point("F", "intersect", "c1", "c2", pick="distinct_from", ref="A"),
        _circle("c3", "F", "E", "F"),
        _point("G", "intersect", "c1", "c3", pick="distinct_from", ref="E"),
        # bisect GDA and take both ends of that diameter
        _line("bD", "angle_bisector", "D", "G", "A"),
        _point("H", "intersect", "bD", "c1", pick="upper"),
        _point("K", "intersect", "bD", "c1", pick="lower"),
        _line("AB", "line_through", "A", "B"),
        _line("DG", "line_through", "D", "G"),
        _line("KG", "line_through", "K", "G"),
        _line("KA", "line_through", "K", "A"),
    )
    return ConstructionProgram(
        params=(Param("theta", ANGLE),),
        steps=steps,
        exports=("A", "B", "C", "D", "E", "F", "G", "H", "K"),
        name="method2",
    )


def _method3() -> ConstructionProgram:
    steps = (
        _coord("O", "0", "0"),
        _coord("B", "1", "0"),
        _line("OB", "line_through", "O", "B"),
        # given angle BOE with E on the perpendicular at B
        _line("pB", "perpendicular_at", "OB", "B"),
        _line("rO", "ray_from_angle", "O", "B", "theta", Word("ccw")),
        _point("E", "intersect", "rO", "pB"),
        # extend BO to C with OC = 2 OB
        _circle("cB", "B", "B", "O"),
        _point("B2", "intersect", "OB", "cB", pick="distinct_from", ref="O"),
        _circle("cO", "O", "O", "B2"),
        _point("C", "intersect", "OB", "cO", pick="distinct_from", ref="B2"),
        # D on CE above the midpoint M of CO
        _line("CE", "line_through", "C", "E"),
        _line("pCO", "perpendicular_bisector", "C", "O"),
        _point("D", "intersect", "pCO", "CE"),
        _point("M", "midpoint", "C", "O"),
        # circle through D about O gives A on CE and T on BE
        _circle("cD", "O", "O", "D"),
        _point("A", "intersect", "CE", "cD", pick="distinct_from", ref="D"),
        _line("BE", "line_through", "B", "E"),
        _point("T", "intersect", "BE", "cD", pick="upper"),
        _line("OA", "line_through", "O", "A"),
        _point("K", "intersect", "OA", "BE", optional=True),
        _circle("cT", "T", "T", "B"),
        _point("F", "intersect", "BE", "cT", pick="distinct_from", ref="B"),
        # feet of the perpendiculars from O to CE and from A to OB
        _line("pO", "perpendicular_at", "CE", "O"),
        _point("L", "intersect", "CE", "pO"),
        _line("pA", "perpendicular_at", "OB", "A"),
        _point("N", "intersect", "OB", "pA"),
        _line("OD", "line_through", "O", "D"),
        _line("OT", "line_through", "O", "T"),
    )
    return ConstructionProgram(
        params=(Param("theta", ANGLE),),
        steps=steps,
        exports=("O", "B", "C", "E", "M", "D", "A", "T", "K", "F", "L", "N"),
        name="method3",
    )


_BUILDERS = {
    MethodId.METHOD1: _method1,
    MethodId.METHOD2: _method2,
    MethodId.METHOD3: _method3,
}


@lru_cache(maxsize=None)
def builtin(method: MethodId) -> ConstructionProgram:
    """The built-in program for a method; programs are immutable, so one instance is shared."""
    return _BUILDERS[MethodId(method)]()
