"""Canonical text form of a ConstructionProgram. Comments and layout are not preserved."""
from .program import COORD, ConstructionProgram, Dist, Num, Ref, ScriptSource, Step, Word


def _format_arg(arg) -> str:
    if isinstance(arg, Ref):
        return arg.name
    if isinstance(arg, (Num, Word)):
        return arg.text
    if isinstance(arg, Dist):
        return f"dist({arg.p}, {arg.q})"
    raise TypeError(f"cannot format argument {arg!r}")


def _format_step(step: Step) -> str:
    if step.op == COORD:
        x, y = step.args
        expr = f"({x.text}, {y.text})"
    else:
        expr = f"{step.op}({', '.join(_format_arg(a) for a in step.args)})"
    line = f"{step.kind} {step.name} = {expr}"
    if step.pick is not None:
        hint = step.pick.kind if step.pick.ref is None else f"{step.pick.kind}({step.pick.ref})"
        line += f" pick {hint}"
    if step.optional:
        line += " optional"
    return line


def format_program(program: ConstructionProgram) -> ScriptSource:
    """Params first, then steps in order, then a single export line."""
    lines = [f"param {p.name}: {p.kind}" for p in program.params]
    lines.extend(_format_step(s) for s in program.steps)
    if program.exports:
        lines.append(f"export {', '.join(program.exports)}")
    return ScriptSource(text="\n".join(lines) + "\n", name=program.name)
