from .errors import (
    ArityError,
    DuplicateName,
    KindMismatch,
    MissingPick,
    OptionalDependency,
    ScriptError,
    ScriptSyntaxError,
    UndefinedIdentifier,
    UnexpectedPick,
)
from .formatter import format_program
from .parser import load_script, parse
from .program import ConstructionProgram, Dist, Num, Param, PickHint, Ref, ScriptSource, Step, Word

__all__ = [
    "ArityError",
    "DuplicateName",
    "KindMismatch",
    "MissingPick",
    "OptionalDependency",
    "ScriptError",
    "ScriptSyntaxError",
    "UndefinedIdentifier",
    "UnexpectedPick",
    "format_program",
    "load_script",
    "parse",
    "ConstructionProgram",
    "Dist",
    "Num",
    "Param",
    "PickHint",
    "Ref",
    "ScriptSource",
    "Step",
    "Word",
]
