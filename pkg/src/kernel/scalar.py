"""Numeric backends: machine floats or mpmath at a configurable precision.

Every length and angle in the kernel is a backend scalar. Geometry code never
imports math or mpmath directly; it goes through the Backend it was handed, so
one construction runs unchanged at 53 bits or at 256.
"""
import math
from abc import ABC, abstractmethod
from typing import Any

import mpmath

# float on the machine backend, an mpf of the backend's own context on bigfloat
Scalar = Any
# Scalar in degrees
AngleDeg = Any

MACHINE_BITS = 53
MACHINE_EPS = 1e-9
MIN_BIGFLOAT_BITS = 53


class BackendError(ValueError):
    """Raised for an invalid backend request (unknown kind, too few bits)."""


class Backend(ABC):
    """Arithmetic provider. Two backends configured identically give bit-identical results."""

    kind: str
    precision_bits: int
    eps: Scalar
    name: str

    @abstractmethod
    def num(self, value) -> Scalar:
        """Convert an int, float or decimal string into a scalar of this backend."""

    @abstractmethod
    def sqrt(self, x: Scalar) -> Scalar: ...

    @abstractmethod
    def sin(self, x: Scalar) -> Scalar: ...

    @abstractmethod
    def cos(self, x: Scalar) -> Scalar: ...

    @abstractmethod
    def tan(self, x: Scalar) -> Scalar: ...

    @abstractmethod
    def atan(self, x: Scalar) -> Scalar: ...

    @abstractmethod
    def atan2(self, y: Scalar, x: Scalar) -> Scalar: ...

    @property
    @abstractmethod
    def pi(self) -> Scalar: ...

    @abstractmethod
    def exact(self, x: Scalar) -> str:
        """Shortest decimal text that reads back to the same scalar."""

    @abstractmethod
    def to_json(self, x: Scalar):
        """JSON-safe lossless value: a float on machine, a decimal string on bigfloat."""

    def deg_to_rad(self, a: AngleDeg) -> Scalar:
        return a * self.pi / 180

    def rad_to_deg(self, r: Scalar) -> AngleDeg:
        return r * 180 / self.pi

    def hypot(self, x: Scalar, y: Scalar) -> Scalar:
        return self.sqrt(x * x + y * y)

    def fmt(self, x: Scalar, digits: int = 12) -> str:
        """Human-readable text with `digits` significant digits ("45", "1.5e-14")."""
        text = f"{float(x):.{digits}g}"
        return "0" if text == "-0" else text

    def __repr__(self) -> str:
        return f"<Backend {self.name}>"


class MachineBackend(Backend):
    def __init__(self, eps: float | None = None):
        self.kind = "machine"
        self.precision_bits = MACHINE_BITS
        self.eps = float(eps) if eps is not None else MACHINE_EPS
        self.name = "machine"

    def num(self, value) -> float:
        return float(value)

    def sqrt(self, x):
        return math.sqrt(x)

    def sin(self, x):
        return math.sin(x)

    def cos(self, x):
        return math.cos(x)

    def tan(self, x):
        return math.tan(x)

    def atan(self, x):
        return math.atan(x)

    def atan2(self, y, x):
        return math.atan2(y, x)

    @property
    def pi(self):
        return math.pi

    def exact(self, x) -> str:
        return repr(float(x))

    def to_json(self, x):
        return float(x)


class BigFloatBackend(Backend):
    """mpmath backend owning a private MPContext, so its precision never leaks into mpmath.mp."""

    def __init__(self, precision_bits: int, eps=None):
        self.kind = "bigfloat"
        self.precision_bits = precision_bits
        self._ctx = mpmath.MPContext()
        self._ctx.prec = precision_bits
        self._pi = +self._ctx.pi
        if eps is None:
            eps = self._ctx.power(2, self._ctx.mpf(-precision_bits) / 2 + 4)
        self.eps = self._ctx.mpf(eps)
        self.name = f"bigfloat:{precision_bits}"
        # decimal digits needed for a lossless round trip at this precision
        self._exact_digits = int(math.ceil(precision_bits * math.log10(2))) + 1

    def num(self, value):
        if isinstance(value, str):
            return self._ctx.mpf(value.strip())
        return self._ctx.mpf(value)

    def sqrt(self, x):
        return self._ctx.sqrt(x)

    def sin(self, x):
        return self._ctx.sin(x)

    def cos(self, x):
        return self._ctx.cos(x)

    def tan(self, x):
        return self._ctx.tan(x)

    def atan(self, x):
        return self._ctx.atan(x)

    def atan2(self, y, x):
        return self._ctx.atan2(y, x)

    @property
    def pi(self):
        return self._pi

    def exact(self, x) -> str:
        return self._ctx.nstr(self._ctx.mpf(x), self._exact_digits)

    def to_json(self, x):
        return self.exact(x)


def make_backend(kind: str, precision_bits: int | None = None, eps=None) -> Backend:
    """
    Build a backend. `machine` ignores precision_bits (53-bit significand, eps 1e-9);
    `bigfloat` needs precision_bits >= 53 and defaults eps to 2^(-precision_bits/2 + 4).
    """
    kind = (kind or "").strip().lower()
    if kind == "machine":
        return MachineBackend(eps=eps)
    if kind == "bigfloat":
        if precision_bits is None:
            raise BackendError("bigfloat backend needs precision_bits")
        if int(precision_bits) < MIN_BIGFLOAT_BITS:
            raise BackendError(f"precision_bits must be >= {MIN_BIGFLOAT_BITS}, got {precision_bits}")
        return BigFloatBackend(int(precision_bits), eps=eps)
    raise BackendError(f"unknown backend kind {kind!r} (expected machine or bigfloat)")
