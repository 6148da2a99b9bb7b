"""SVG 1.1 figures of an executed construction.

World coordinates are written as-is inside one flipped group
(matrix(s 0 0 -s tx ty)); only labels live in canvas space, so text stays upright.
"""
import math
from dataclasses import dataclass, field
from xml.sax.saxutils import escape

from ..config import load_config
from ..engine import Environment, Trace
from ..kernel.geom import Circle, Line, Point, Ray, as_line, line_residual


class EmptyTrace(ValueError):
    pass


@dataclass(frozen=True)
class RenderOptions:
    width: int = 800
    height: int = 600
    margin: int = 40
    stroke_width: float = 1.5
    font_size: int = 14
    show_labels: bool = True
    show_angle_arcs: bool = True
    show_construction_circles: bool = True
    # angle names with the vertex in the middle: "GEB" or "G:E:B"
    angle_arcs: tuple[str, ...] = field(default_factory=tuple)
    arc_radius: float = 22.0
    point_radius: float = 2.5

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise ValueError(f"canvas must have positive size, got {self.width}x{self.height}")
        if self.margin < 0 or 2 * self.margin >= min(self.width, self.height):
            raise ValueError(f"margin {self.margin} does not fit a {self.width}x{self.height} canvas")
        if self.stroke_width <= 0 or self.font_size <= 0:
            raise ValueError("stroke width and font size must be positive")

    @classmethod
    def from_config(cls, **overrides) -> "RenderOptions":
        cfg = dict(load_config().get("render") or {})
        known = {k: v for k, v in cfg.items() if k in cls.__dataclass_fields__}
        known.update({k: v for k, v in overrides.items() if v is not None})
        if "angle_arcs" in known:
            known["angle_arcs"] = tuple(known["angle_arcs"])
        return cls(**known)


def _num(x) -> str:
    text = f"{float(x):.9g}"
    return "0" if text == "-0" else text


class _Frame:
    """World-to-canvas mapping that fits a bounding box inside the margins, aspect kept."""

    def __init__(self, xs: list[float], ys: list[float], opts: RenderOptions):
        xmin, xmax = min(xs), max(xs)
        ymin, ymax = min(ys), max(ys)
        span_x = xmax - xmin or 1.0
        span_y = ymax - ymin or 1.0
        inner_w = opts.width - 2 * opts.margin
        inner_h = opts.height - 2 * opts.margin
        self.s = min(inner_w / span_x, inner_h / span_y)
        pad_x = (inner_w - self.s * (xmax - xmin)) / 2
        pad_y = (inner_h - self.s * (ymax - ymin)) / 2
        self.tx = opts.margin + pad_x - self.s * xmin
        self.ty = opts.height - opts.margin - pad_y + self.s * ymin

    def canvas(self, x: float, y: float) -> tuple[float, float]:
        return self.s * x + self.tx, self.ty - self.s * y

    def transform(self) -> str:
        return f"matrix({_num(self.s)} 0 0 {_num(-self.s)} {_num(self.tx)} {_num(self.ty)})"


def _segment(env: Environment, obj) -> tuple[Point, Point] | None:
    """The stretch of a line (or ray) between the outermost environment points lying on it."""
    bk = env.backend
    line = as_line(bk, obj)
    on = [p for _, p in env.points() if abs(line_residual(line, p)) <= 10 * bk.eps]
    if isinstance(obj, Ray):
        on.append(obj.origin)
    if len(on) < 2:
        return None
    # parameter along the direction (-b, a)
    key = lambda p: float(-line.b * p.x + line.a * p.y)
    lo, hi = min(on, key=key), max(on, key=key)
    if key(hi) - key(lo) <= float(bk.eps):
        return None
    return lo, hi


def _arc(env: Environment, name: str, radius: float) -> str | None:
    names = [n.strip() for n in name.split(":")] if ":" in name else list(name)
    if len(names) != 3:
        return None
    pts = [env.get(n) for n in names]
    if not all(isinstance(p, Point) for p in pts):
        return None
    a, v, b = ((float(p.x), float(p.y)) for p in pts)
    u1 = (a[0] - v[0], a[1] - v[1])
    u2 = (b[0] - v[0], b[1] - v[1])
    n1, n2 = math.hypot(*u1), math.hypot(*u2)
    if n1 == 0 or n2 == 0:
        return None
    u1 = (u1[0] / n1, u1[1] / n1)
    u2 = (u2[0] / n2, u2[1] / n2)
    sweep = 1 if u1[0] * u2[1] - u1[1] * u2[0] > 0 else 0
    x0, y0 = v[0] + radius * u1[0], v[1] + radius * u1[1]
    x1, y1 = v[0] + radius * u2[0], v[1] + radius * u2[1]
    r = _num(radius)
    return (
        f'<path class="arc" id="arc-{escape(name)}" d="M {_num(x0)} {_num(y0)} '
        f'A {r} {r} 0 0 {sweep} {_num(x1)} {_num(y1)}"/>'
    )


def to_svg(trace: Trace, env: Environment, opts: RenderOptions | None = None) -> bytes:
    """Render a trace as a standalone SVG document (UTF-8 bytes)."""
    if not trace:
        raise EmptyTrace("nothing to render: the trace is empty")
    opts = opts or RenderOptions()

    xs, ys = [], []
    for _, p in env.points():
        xs.append(float(p.x))
        ys.append(float(p.y))
    if opts.show_construction_circles:
        for entry in trace:
            if isinstance(entry.produced, Circle):
                c, r = entry.produced.center, float(entry.produced.r)
                xs += [float(c.x) - r, float(c.x) + r]
                ys += [float(c.y) - r, float(c.y) + r]
    if not xs:
        raise EmptyTrace("nothing to render: no points were constructed")
    frame = _Frame(xs, ys, opts)
    unit = 1 / frame.s

    body = []
    for entry in trace:
        obj = entry.produced
        name = escape(entry.step.name)
        if isinstance(obj, (Line, Ray)):
            seg = _segment(env, obj)
            if seg is None:
                continue
            p, q = seg
            body.append(
                f'<line class="line" id="{name}" x1="{_num(p.x)}" y1="{_num(p.y)}" '
                f'x2="{_num(q.x)}" y2="{_num(q.y)}"/>'
            )
        elif isinstance(obj, Circle) and opts.show_construction_circles:
            body.append(
                f'<circle class="construction" id="{name}" cx="{_num(obj.center.x)}" '
                f'cy="{_num(obj.center.y)}" r="{_num(obj.r)}"/>'
            )
    if opts.show_angle_arcs:
        for arc_name in opts.angle_arcs:
            arc = _arc(env, arc_name, opts.arc_radius * unit)
            if arc is not None:
                body.append(arc)
    for name, p in env.points():
        body.append(
            f'<circle class="point" id="pt-{escape(name)}" fill="black" cx="{_num(p.x)}" cy="{_num(p.y)}" '
            f'r="{_num(opts.point_radius * unit)}"/>'
        )

    labels = []
    if opts.show_labels:
        offset = opts.font_size * 0.4
        for name, p in env.exported_points():
            cx, cy = frame.canvas(float(p.x), float(p.y))
            labels.append(
                f'<text class="label" x="{_num(cx + offset)}" y="{_num(cy - offset)}">{escape(name)}</text>'
            )

    stroke = _num(opts.stroke_width * unit)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{opts.width}" '
        f'height="{opts.height}" viewBox="0 0 {opts.width} {opts.height}">',
        '<rect width="100%" height="100%" fill="white"/>',
        f'<g transform="{frame.transform()}" fill="none" stroke="black" stroke-width="{stroke}">',
        *body,
        "</g>",
        f'<g font-family="sans-serif" font-size="{opts.font_size}" fill="black">',
        *labels,
        "</g>",
        "</svg>",
    ]
    return ("\n".join(out) + "\n").encode("utf-8")
