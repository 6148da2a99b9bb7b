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
from .executor import Bindings, execute, measure_angle, measure_length

__all__ = [
    "Environment",
    "Trace",
    "TraceEntry",
    "AmbiguousPick",
    "DegenerateConstruction",
    "ExecutionError",
    "NotAPoint",
    "StepFailed",
    "UnboundParameter",
    "UnknownName",
    "Bindings",
    "execute",
    "measure_angle",
    "measure_length",
]
