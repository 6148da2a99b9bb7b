from .ids import (
    EXTERIOR_INTERVAL,
    VALID_INTERVALS,
    MethodId,
    TargetOutOfRange,
    ThetaOutOfRange,
    check_theta,
    valid_interval,
)
from .programs import builtin
from .reports import Method1Report, Method2Report, Method3Report, MethodReport, angle
from .roots import bisect, scan_roots
from .run import TARGET_INTERVALS, fixed_point, fixed_points, inverse_seed, run_method

__all__ = [
    "EXTERIOR_INTERVAL",
    "VALID_INTERVALS",
    "MethodId",
    "TargetOutOfRange",
    "ThetaOutOfRange",
    "check_theta",
    "valid_interval",
    "builtin",
    "Method1Report",
    "Method2Report",
    "Method3Report",
    "MethodReport",
    "angle",
    "bisect",
    "scan_roots",
    "TARGET_INTERVALS",
    "fixed_point",
    "fixed_points",
    "inverse_seed",
    "run_method",
]
