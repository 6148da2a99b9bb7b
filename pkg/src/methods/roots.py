"""Sign-change scan plus bisection, for roots of theta -> derived(theta) - theta."""
from collections.abc import Callable

from ..engine import ExecutionError
from ..kernel.geom import GeometryError
from ..kernel.scalar import Backend


def _safe(f: Callable, x):
    try:
        return f(x)
    except (ExecutionError, GeometryError):
        return None


def bisect(f: Callable, a, b, fa, tol) -> object | None:
    """Shrink [a, b] around the sign change of f until it is at most tol wide. None if f fails inside."""
    while b - a > tol:
        m = (a + b) / 2
        fm = _safe(f, m)
        if fm is None:
            return None
        if fm == 0:
            return m
        if (fa < 0) == (fm < 0):
            a, fa = m, fm
        else:
            b = m
    return (a + b) / 2


def scan_roots(
    f: Callable,
    lo: float,
    hi: float,
    backend: Backend,
    *,
    step: float = 1.0,
    offset: float = 0.25,
    tol: float = 1e-12,
) -> list:
    """
    Evaluate f on lo+offset, lo+offset+step, ... below hi, then bisect every bracket
    where the sign changes. Nodes where f fails (degenerate construction) are skipped.
    Roots are returned ascending, with duplicates closer than 10*tol merged.
    """
    nodes = []
    i = 0
    while lo + offset + i * step < hi:
        x = backend.num(lo + offset + i * step)
        nodes.append((x, _safe(f, x)))
        i += 1

    roots = []
    for (x0, f0), (x1, f1) in zip(nodes, nodes[1:]):
        if f0 is None or f1 is None:
            continue
        if f0 == 0:
            roots.append(x0)
        elif f1 != 0 and (f0 < 0) != (f1 < 0):
            r = bisect(f, x0, x1, f0, backend.num(tol))
            if r is not None:
                roots.append(r)
    if nodes and nodes[-1][1] == 0:
        roots.append(nodes[-1][0])

    merged = []
    for r in sorted(roots):
        if not merged or r - merged[-1] > 10 * tol:
            merged.append(r)
    return merged
