"""Evaluate every registered claim over a grid of given angles."""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from ..config import load_config
from ..engine import ExecutionError
from ..kernel.geom import GeometryError
from ..kernel.scalar import Backend
from ..logging_utils import log_sweep
from ..methods import MethodId, fixed_points, run_method, valid_interval
from .claims import LENGTH, TRISECTION_CLAIMS, ClaimResult, Tolerances, claims_for, evaluate_claim, get_claim


class GridOutOfRange(ValueError):
    pass


@dataclass
class SweepReport:
    method: MethodId
    grid: tuple[float, float, float]
    backend: Backend = field(repr=False)
    exterior: bool = False
    thetas: list = field(default_factory=list)
    results: list[ClaimResult] = field(default_factory=list)
    claim_ids: list[str] = field(default_factory=list)
    pass_counts: dict[str, int] = field(default_factory=dict)
    fail_counts: dict[str, int] = field(default_factory=dict)
    # (theta, reason) for grid points where the construction itself failed
    excluded: list[tuple] = field(default_factory=list)
    fixed_points: list = field(default_factory=list)

    @property
    def grid_size(self) -> int:
        return len(self.thetas)

    def max_residual(self, claim_id: str | None = None):
        values = [abs(r.residual) for r in self.results if claim_id is None or r.claim_id == claim_id]
        return max(values) if values else None

    @property
    def max_angle_residual(self):
        values = [abs(r.residual) for r in self.results if r.kind != LENGTH]
        return max(values) if values else None

    @property
    def all_passed(self) -> bool:
        return not self.excluded and not any(self.fail_counts.values())

    def summary(self) -> dict:
        bk = self.backend
        start, stop, step = self.grid
        top = self.max_angle_residual
        return {
            "method": self.method.value,
            "backend": bk.name,
            "grid": {"start": start, "stop": stop, "step": step, "points": self.grid_size},
            "exterior": self.exterior,
            "pass_counts": dict(self.pass_counts),
            "fail_counts": dict(self.fail_counts),
            "max_residual_deg": bk.to_json(top) if top is not None else None,
            "excluded": [{"theta_deg": bk.to_json(t), "reason": why} for t, why in self.excluded],
            "fixed_points": [bk.to_json(x) for x in self.fixed_points],
            "all_passed": self.all_passed,
        }


def make_grid(start: float, stop: float, step: float) -> list[float]:
    """start, start+step, ... up to and including stop (within a 1e-9 step slack)."""
    n = int((stop - start) / step + 1e-9)
    return [round(start + i * step, 12) for i in range(n + 1)]


def _check_grid(method: MethodId, grid, exterior: bool) -> None:
    start, stop, step = grid
    lo, hi = valid_interval(method, exterior)
    if step <= 0:
        raise GridOutOfRange(f"step must be positive, got {step}")
    if start > stop:
        raise GridOutOfRange(f"start {start} is past stop {stop}")
    if not (lo < start and stop < hi):
        raise GridOutOfRange(f"{method.short}: grid {start}..{stop} leaves the open interval ({lo}, {hi})")


def sweep(
    method: MethodId,
    grid: tuple[float, float, float],
    backend: Backend,
    exterior: bool = False,
    *,
    tolerances: Tolerances | None = None,
    workers: int | None = None,
    with_fixed_points: bool = True,
    log: bool = True,
) -> SweepReport:
    """
    Run the method at every grid angle and evaluate all of its claims there.
    Results are ordered by theta then by claim, whatever the worker count.
    """
    method = MethodId(method)
    grid = tuple(float(g) for g in grid)
    _check_grid(method, grid, exterior)
    tolerances = tolerances or Tolerances.from_config()
    if workers is None:
        workers = int(load_config().get("workers", 1) or 1)
    claims = claims_for(method)
    thetas = [backend.num(t) for t in make_grid(*grid)]

    def one(theta):
        try:
            report = run_method(method, theta, backend, exterior=exterior)
        except (ExecutionError, GeometryError) as e:
            return theta, None, str(e)
        return theta, [evaluate_claim(c, report, backend, tolerances) for c in claims], None

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(one, thetas))
    else:
        outcomes = [one(t) for t in thetas]

    report = SweepReport(
        method=method,
        grid=grid,
        backend=backend,
        exterior=exterior,
        thetas=thetas,
        claim_ids=[c.id for c in claims],
        pass_counts={c.id: 0 for c in claims},
        fail_counts={c.id: 0 for c in claims},
    )
    for theta, results, reason in outcomes:
        if results is None:
            report.excluded.append((theta, reason))
            continue
        for r in results:
            report.results.append(r)
            if r.passed:
                report.pass_counts[r.claim_id] += 1
            else:
                report.fail_counts[r.claim_id] += 1
    if with_fixed_points and not exterior:
        report.fixed_points = find_fixed_points(method, backend)
    if log:
        log_sweep(method.value, report.summary())
    return report


def check_trisection(method: MethodId, theta, backend: Backend, tolerances: Tolerances | None = None) -> ClaimResult:
    """The headline trisection relation of a method, evaluated at one angle."""
    method = MethodId(method)
    report = run_method(method, theta, backend)
    return evaluate_claim(get_claim(TRISECTION_CLAIMS[method]), report, backend, tolerances)


def find_fixed_points(method: MethodId, backend: Backend) -> list:
    return fixed_points(method, backend)
