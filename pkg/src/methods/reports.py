"""Per-method reports, measured from an executed environment.

Nothing here evaluates a closed-form relation: every field is read off the
geometry, so the verifier can check the relations against independent numbers.
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, ClassVar

from ..engine import Environment, Trace, measure_angle, measure_length
from ..kernel.geom import point_in_triangle
from ..kernel.scalar import AngleDeg, Scalar
from .ids import MethodId


def angle(env: Environment, name: str) -> AngleDeg:
    """Angle by three-letter name with the vertex in the middle: "GEB" is the angle at E."""
    if len(name) != 3:
        raise ValueError(f"angle name must be three point names, got {name!r}")
    return measure_angle(env, name[1], name[0], name[2])


def _angles(env: Environment, names: tuple[str, ...]) -> dict[str, AngleDeg]:
    return {n: angle(env, n) for n in names}


def _lengths(env: Environment, names: tuple[str, ...]) -> dict[str, Scalar]:
    return {n: measure_length(env, n[0], n[1]) for n in names}


@dataclass(frozen=True, kw_only=True)
class MethodReport(ABC):
    method: MethodId
    theta: AngleDeg
    angles: dict[str, AngleDeg] = field(default_factory=dict)
    lengths: dict[str, Scalar] = field(default_factory=dict)
    env: Environment | None = field(default=None, compare=False, repr=False)
    trace: Trace = field(default=(), compare=False, repr=False)

    # angles worth marking in a figure of this method
    ARCS: ClassVar[tuple[str, ...]] = ()

    @property
    @abstractmethod
    def derived(self) -> AngleDeg:
        """The derived angle fixed points are measured on (beta, or alpha for method2)."""


@dataclass(frozen=True, kw_only=True)
class Method1Report(MethodReport):
    beta: AngleDeg
    hbe: AngleDeg
    e_outside_hab: bool = False
    ARCS: ClassVar[tuple[str, ...]] = ("BAD", "GEB", "HBE")

    @property
    def derived(self) -> AngleDeg:
        return self.beta


@dataclass(frozen=True, kw_only=True)
class Method2Report(MethodReport):
    beta: AngleDeg
    alpha: AngleDeg
    eta: AngleDeg
    phi: AngleDeg
    thirds: tuple[AngleDeg, AngleDeg, AngleDeg]
    k_thirds: tuple[AngleDeg, AngleDeg, AngleDeg]
    ARCS: ClassVar[tuple[str, ...]] = ("BAC", "GDA", "GKA")

    @property
    def derived(self) -> AngleDeg:
        return self.alpha


@dataclass(frozen=True, kw_only=True)
class Method3Report(MethodReport):
    beta: AngleDeg
    mcd: AngleDeg
    bot: AngleDeg
    odl: AngleDeg
    theta_minus_beta: AngleDeg
    ARCS: ClassVar[tuple[str, ...]] = ("BOE", "BOA", "MCD", "BOT")

    @property
    def derived(self) -> AngleDeg:
        return self.beta


def _method1(theta, env: Environment, trace: Trace) -> Method1Report:
    bk = env.backend
    angles = _angles(env, ("BAD", "DBA", "GEB", "HBE", "AEG", "HBA", "FGA", "AFG", "EAB"))
    lengths = _lengths(env, ("AG", "AB"))
    # beta is negative once G falls beyond B on AB extended
    g_inside = lengths["AG"] <= lengths["AB"]
    beta = angles["GEB"] if g_inside else -angles["GEB"]
    outside = not point_in_triangle(bk, env["E"], env["H"], env["A"], env["B"])
    hbe = -angles["HBE"] if outside else angles["HBE"]
    return Method1Report(
        method=MethodId.METHOD1, theta=theta, angles=angles, lengths=lengths, env=env, trace=trace,
        beta=beta, hbe=hbe, e_outside_hab=outside,
    )


def _method2(theta, env: Environment, trace: Trace) -> Method2Report:
    angles = _angles(env, (
        "BAC", "GDA", "GKA", "EBA",
        "EDA", "FDE", "GDF",
        "EKA", "FKE", "GKF",
        "AED", "EAF", "EKF", "GAF", "BAG",
    ))
    lengths = _lengths(env, ("AE", "EF", "FG", "DA", "DE"))
    alpha = angles["GKA"]
    return Method2Report(
        method=MethodId.METHOD2, theta=theta, angles=angles, lengths=lengths, env=env, trace=trace,
        beta=angles["GDA"],
        alpha=alpha,
        eta=angles["EBA"],
        phi=theta - alpha,
        thirds=(angles["EDA"], angles["FDE"], angles["GDF"]),
        k_thirds=(angles["EKA"], angles["FKE"], angles["GKF"]),
    )


def _method3(theta, env: Environment, trace: Trace) -> Method3Report:
    angles = _angles(env, ("BOE", "BOA", "MCD", "BOT", "ODL", "LAO"))
    lengths = _lengths(env, ("CD", "OD", "OA"))
    return Method3Report(
        method=MethodId.METHOD3, theta=theta, angles=angles, lengths=lengths, env=env, trace=trace,
        beta=angles["BOA"],
        mcd=angles["MCD"],
        bot=angles["BOT"],
        odl=angles["ODL"],
        theta_minus_beta=theta - angles["BOA"],
    )


_MEASURES = {
    MethodId.METHOD1: _method1,
    MethodId.METHOD2: _method2,
    MethodId.METHOD3: _method3,
}


def measure_report(method: MethodId, theta: Any, env: Environment, trace: Trace) -> MethodReport:
    return _MEASURES[method](theta, env, trace)
