from .claims import CLAIMS, Claim, ClaimResult, Tolerances, claims_for, evaluate_claim, get_claim
from .report import FORMATTERS, format_csv, format_json_lines, format_text
from .sweep import GridOutOfRange, SweepReport, check_trisection, find_fixed_points, make_grid, sweep

__all__ = [
    "CLAIMS",
    "Claim",
    "ClaimResult",
    "Tolerances",
    "claims_for",
    "evaluate_claim",
    "get_claim",
    "FORMATTERS",
    "format_csv",
    "format_json_lines",
    "format_text",
    "GridOutOfRange",
    "SweepReport",
    "check_trisection",
    "find_fixed_points",
    "make_grid",
    "sweep",
]
