"""Running a method at a given angle, seeding it backwards, and locating its fixed point."""
from ..config import load_config
from ..engine import execute
from ..kernel.scalar import AngleDeg, Backend, make_backend
from .ids import MethodId, TargetOutOfRange, check_theta, valid_interval
from .programs import builtin
from .reports import MethodReport, measure_report
from .roots import scan_roots

# open ranges of the derived angle accepted by inverse_seed
TARGET_INTERVALS: dict[MethodId, tuple[int, int]] = {
    MethodId.METHOD1: (0, 90),
    MethodId.METHOD2: (0, 180),
    MethodId.METHOD3: (0, 180),
}


def run_method(method: MethodId, theta, backend: Backend, exterior: bool = False) -> MethodReport:
    """Execute the built-in program at theta and measure its report."""
    method = MethodId(method)
    theta = backend.num(theta)
    check_theta(method, theta, exterior)
    env, trace = execute(builtin(method), {"theta": theta}, backend)
    return measure_report(method, theta, env, trace)


def inverse_seed(method: MethodId, target_beta, backend: Backend | None = None) -> AngleDeg:
    """
    The given angle whose construction yields `target_beta` as its derived angle
    (for method2 the target is the central angle GDA).
    """
    method = MethodId(method)
    bk = backend or make_backend("machine")
    beta = bk.num(target_beta)
    lo, hi = TARGET_INTERVALS[method]
    if not lo < beta < hi:
        raise TargetOutOfRange(f"{method.short}: target beta={float(beta):.12g} is outside ({lo}, {hi})")
    if method is MethodId.METHOD1:
        theta = 2 * (90 - beta) / 3
    elif method is MethodId.METHOD2:
        theta = 90 - beta / 6
    else:
        theta = bk.rad_to_deg(bk.atan(3 * bk.tan(bk.deg_to_rad(beta / 3))))
    t_lo, t_hi = valid_interval(method)
    if not t_lo < theta < t_hi:
        raise TargetOutOfRange(f"{method.short}: target beta={float(beta):.12g} needs theta outside ({t_lo}, {t_hi})")
    return theta


def derived_minus_theta(method: MethodId, backend: Backend):
    def f(theta):
        return run_method(method, theta, backend).derived - theta
    return f


def fixed_points(method: MethodId, backend: Backend | None = None, tol=None) -> list:
    """Every theta in the valid interval where the derived angle equals the given one."""
    method = MethodId(method)
    bk = backend or make_backend("machine")
    if tol is None:
        tol = load_config().get("fixed_point_tolerance_deg", 1e-12)
    lo, hi = valid_interval(method)
    return scan_roots(derived_minus_theta(method, bk), lo, hi, bk, tol=tol)


def fixed_point(method: MethodId, backend: Backend | None = None) -> AngleDeg | None:
    roots = fixed_points(method, backend)
    return roots[0] if roots else None
