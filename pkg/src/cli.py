"""
CLI entrypoint: run, verify, render, seed, fixed-points.

Exit codes: 0 success (all claims pass), 1 construction or I/O failure or a
failing claim, 2 usage error (bad arguments, out-of-range angle, parse error,
missing script).
"""
import argparse
import math
import sys
from pathlib import Path

from .config import ConfigError, get_backend_spec, get_constructions_dir, get_sweep_defaults, load_config
from .engine import ExecutionError, NotAPoint, UnboundParameter, UnknownName, execute, measure_angle
from .kernel.geom import GeometryError
from .kernel.scalar import Backend, BackendError, make_backend
from .logging_utils import log_execution, log_render, set_run_log_subdir
from .methods import (
    EXTERIOR_INTERVAL,
    MethodId,
    TargetOutOfRange,
    ThetaOutOfRange,
    fixed_points,
    inverse_seed,
    run_method,
)
from .render import EmptyTrace, RenderOptions, to_svg
from .script import ScriptError, load_script
from .verifier import FORMATTERS, GridOutOfRange, Tolerances, sweep

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class UsageError(ValueError):
    pass


class ScriptNotFound(UsageError):
    pass


def _error(message: str) -> None:
    print(f"Error: {message}", file=sys.stderr)


def _backend(args) -> Backend:
    """Flags win over GEOM_BACKEND, which wins over config.yaml."""
    cfg = load_config()
    env_spec = get_backend_spec()
    kind = args.backend or (env_spec[0] if env_spec else cfg.get("backend", "machine"))
    bits = args.precision
    if bits is None and env_spec and env_spec[0] == "bigfloat":
        bits = env_spec[1]
    if bits is None:
        bits = cfg.get("precision_bits", 256)
    return make_backend(kind, bits, cfg.get("eps"))


def _method(text: str) -> MethodId:
    try:
        return MethodId.parse(text)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _resolve_script(text: str) -> Path:
    path = Path(text)
    candidates = [path]
    if not path.is_absolute():
        candidates.append(get_constructions_dir() / path)
    candidates += [c.with_name(c.name + ".gcs") for c in candidates if c.suffix != ".gcs"]
    for c in candidates:
        if c.is_file():
            return c
    raise ScriptNotFound(f"script not found: {text}")


def _is_finite(value: str) -> bool:
    try:
        return math.isfinite(float(value))
    except ValueError:
        return False


def _finite_float(text: str) -> float:
    """argparse type: a float that is neither inf nor nan."""
    if not _is_finite(text):
        raise argparse.ArgumentTypeError(f"{text!r} is not a finite number")
    return float(text)


def _parse_params(items: list[str] | None) -> dict[str, str]:
    params = {}
    for item in items or []:
        name, sep, value = item.partition("=")
        name, value = name.strip(), value.strip()
        if not sep or not name or not value:
            raise UsageError(f"--param expects NAME=VALUE, got {item!r}")
        if not _is_finite(value):
            raise UsageError(f"--param {name}: {value!r} is not a finite decimal number")
        if name in params:
            raise UsageError(f"--param {name} given twice")
        params[name] = value
    return params


def _angle_names(text: str | None) -> list[str]:
    names = [n.strip() for n in (text or "").split(",") if n.strip()]
    for n in names:
        if ":" in n:
            parts = n.split(":")
            ok = len(parts) == 3 and all(p.strip() for p in parts)
        else:
            ok = len(n) == 3
        if not ok:
            raise UsageError(f"angle {n!r} must be three point names (GEB) or P:V:Q")
    return names


def _measure_named(env, name: str):
    if ":" in name:
        p, v, q = (s.strip() for s in name.split(":"))
        return measure_angle(env, v, p, q)
    return measure_angle(env, name[1], name[0], name[2])


def _execute_script(args, bk: Backend):
    program = load_script(_resolve_script(args.script))
    params = _parse_params(args.param)
    try:
        env, trace = execute(program, params, bk)
    except ExecutionError as e:
        log_execution(program.name, params, "failed", backend=bk.name, failed_step=e.step_index)
        raise
    log_execution(program.name, params, "ok", backend=bk.name)
    return program, env, trace


def cmd_run(args) -> int:
    bk = _backend(args)
    angle_names = _angle_names(args.export_angles)
    program, env, _ = _execute_script(args, bk)
    if angle_names:
        print(" ".join(f"{n}={bk.fmt(_measure_named(env, n))}" for n in angle_names))
        return EXIT_OK
    for name in program.exports:
        p = env.get(name)
        if p is None:
            print(f"{name}=undefined")
        else:
            print(f"{name}=({bk.fmt(p.x)}, {bk.fmt(p.y)})")
    return EXIT_OK


def cmd_verify(args) -> int:
    bk = _backend(args)
    method = _method(args.method)
    if args.exterior:
        if method is not MethodId.METHOD1:
            raise UsageError("--exterior only applies to method1")
        defaults = {"start": EXTERIOR_INTERVAL[0] + 0.5, "stop": EXTERIOR_INTERVAL[1] - 0.5, "step": 0.5}
    else:
        defaults = get_sweep_defaults(method.short)
    grid = (
        args.start if args.start is not None else defaults["start"],
        args.stop if args.stop is not None else defaults["stop"],
        args.step if args.step is not None else defaults["step"],
    )
    tolerances = Tolerances.from_config()
    if args.tolerance is not None:
        tolerances = Tolerances(angle_deg=args.tolerance, length_rel=tolerances.length_rel)
    report = sweep(method, grid, bk, exterior=args.exterior, tolerances=tolerances, workers=args.workers)
    text = FORMATTERS[args.format](report)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        print(f"Wrote {args.format} report to {args.output}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return EXIT_OK if report.all_passed else EXIT_FAILURE


def cmd_render(args) -> int:
    bk = _backend(args)
    arcs = _angle_names(args.arcs)
    try:
        method = MethodId.parse(args.target)
    except ValueError:
        method = None
    if method is not None:
        if args.theta is None:
            raise UsageError(f"render {method.short} needs --theta")
        report = run_method(method, args.theta, bk, exterior=args.exterior)
        env, trace, name = report.env, report.trace, method.short
        arcs = arcs or list(report.ARCS)
    else:
        args.script = args.target
        program, env, trace = _execute_script(args, bk)
        name = program.name
    try:
        opts = RenderOptions.from_config(
            width=args.width,
            height=args.height,
            angle_arcs=tuple(arcs),
            show_labels=not args.no_labels,
            show_angle_arcs=not args.no_arcs,
            show_construction_circles=not args.no_circles,
        )
    except ValueError as e:
        raise UsageError(str(e)) from None
    svg = to_svg(trace, env, opts)
    if args.output:
        out = Path(args.output)
        out.write_bytes(svg)
        log_render(name, out, len(svg))
        print(f"Wrote {out}", file=sys.stderr)
    else:
        sys.stdout.buffer.write(svg)
        sys.stdout.flush()
    return EXIT_OK


def cmd_seed(args) -> int:
    bk = _backend(args)
    method = _method(args.method)
    theta = inverse_seed(method, args.beta, bk)
    report = run_method(method, theta, bk)
    tol = args.tolerance if args.tolerance is not None else Tolerances.from_config().angle_deg
    ok = abs(report.beta - bk.num(args.beta)) <= tol
    print(f"theta={bk.fmt(theta)} roundtrip_beta={bk.fmt(report.beta)} {'pass' if ok else 'fail'}")
    return EXIT_OK if ok else EXIT_FAILURE


def cmd_fixed_points(args) -> int:
    bk = _backend(args)
    method = _method(args.method)
    roots = fixed_points(method, bk)
    if not roots:
        print(f"{method.short}: none")
    for r in roots:
        print(f"{method.short}: theta={bk.fmt(r)}")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trisect", description="Trisection construction engine")
    parser.add_argument("--run-id", dest="run_id", default=None, help="Write logs under logs/<run-id>/")
    backend = argparse.ArgumentParser(add_help=False)
    backend.add_argument("--backend", choices=["machine", "bigfloat"], help="Numeric backend (overrides GEOM_BACKEND)")
    backend.add_argument("--precision", type=int, help="Significand bits for bigfloat")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", parents=[backend], help="Execute a .gcs script")
    p_run.add_argument("script", help="Path to a .gcs file (also looked up in constructions/)")
    p_run.add_argument("--param", action="append", metavar="NAME=VALUE", help="Bind a parameter (repeatable)")
    p_run.add_argument("--export-angles", dest="export_angles", help="Comma-separated angles to print, e.g. GEB,HBE")

    p_verify = sub.add_parser("verify", parents=[backend], help="Sweep a method and check every claim")
    p_verify.add_argument("method")
    p_verify.add_argument("--from", dest="start", type=_finite_float)
    p_verify.add_argument("--to", dest="stop", type=_finite_float)
    p_verify.add_argument("--step", type=_finite_float)
    p_verify.add_argument("--exterior", action="store_true", help="method1 with theta in (60, 90)")
    p_verify.add_argument("--format", choices=sorted(FORMATTERS), default="text")
    p_verify.add_argument("--tolerance", type=_finite_float, help="Angle tolerance in degrees")
    p_verify.add_argument("--workers", type=int, help="Threads for the sweep")
    p_verify.add_argument("-o", "--output", help="Write the report here instead of stdout")

    p_render = sub.add_parser("render", parents=[backend], help="Draw a method or script as SVG")
    p_render.add_argument("target", help="method1|method2|method3 or a .gcs path")
    p_render.add_argument("--theta", type=_finite_float)
    p_render.add_argument("--param", action="append", metavar="NAME=VALUE")
    p_render.add_argument("--exterior", action="store_true")
    p_render.add_argument("--arcs", help="Comma-separated angles to mark, e.g. GEB,HBE")
    p_render.add_argument("--width", type=int)
    p_render.add_argument("--height", type=int)
    p_render.add_argument("--no-labels", dest="no_labels", action="store_true")
    p_render.add_argument("--no-arcs", dest="no_arcs", action="store_true")
    p_render.add_argument("--no-circles", dest="no_circles", action="store_true")
    p_render.add_argument("-o", "--output")

    p_seed = sub.add_parser("seed", parents=[backend], help="Given angle whose derived angle is --beta")
    p_seed.add_argument("method")
    p_seed.add_argument("--beta", type=_finite_float, required=True)
    p_seed.add_argument("--tolerance", type=_finite_float)

    p_fixed = sub.add_parser("fixed-points", parents=[backend], help="Angles trisected by their own construction")
    p_fixed.add_argument("method")
    return parser


COMMANDS = {
    "run": cmd_run,
    "verify": cmd_verify,
    "render": cmd_render,
    "seed": cmd_seed,
    "fixed-points": cmd_fixed_points,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.run_id:
        set_run_log_subdir(args.run_id)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ConfigError, BackendError, ThetaOutOfRange, TargetOutOfRange, GridOutOfRange) as e:
        _error(str(e))
        return EXIT_USAGE
    except (UnboundParameter, UnknownName, NotAPoint) as e:
        _error(str(e))
        return EXIT_USAGE
    except ScriptError as e:
        _error(str(e))
        return EXIT_USAGE
    except (ExecutionError, GeometryError, EmptyTrace) as e:
        _error(str(e))
        return EXIT_FAILURE
    except OSError as e:
        _error(str(e))
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
