"""Registry of the angle and length relations each construction asserts.

A claim turns a measured report into a signed residual (lhs - rhs). Angle
residuals are in degrees and compared against an absolute tolerance; length
residuals are relative. Claims use integer constants only, so a bigfloat
report keeps its full precision through the check.
"""
from collections.abc import Callable
from dataclasses import dataclass

from ..config import load_config
from ..kernel.scalar import Backend, Scalar
from ..methods import MethodId, MethodReport

ANGLE = "angle"
LENGTH = "length"


@dataclass(frozen=True)
class Claim:
    id: str
    method: MethodId
    relation: str
    residual: Callable[[MethodReport, Backend], Scalar]
    kind: str = ANGLE
    tolerance: float | None = None


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    method: MethodId
    theta: Scalar
    residual: Scalar
    tolerance: float
    passed: bool
    kind: str = ANGLE


@dataclass(frozen=True)
class Tolerances:
    angle_deg: float = 1e-9
    length_rel: float = 1e-12

    @classmethod
    def from_config(cls) -> "Tolerances":
        cfg = load_config()
        return cls(
            angle_deg=float(cfg.get("tolerance_deg", 1e-9)),
            length_rel=float(cfg.get("length_tolerance_rel", 1e-12)),
        )


def _worst(*residuals):
    """The residual with the largest magnitude, sign kept."""
    return max(residuals, key=abs)


def _rel(a, b):
    return (a - b) / max(abs(a), abs(b))


def _atan_tan_third(bk: Backend, theta):
    return bk.rad_to_deg(bk.atan(bk.tan(bk.deg_to_rad(theta)) / 3))


_METHOD1 = [
    ("m1.placed_angle", "BAD = theta", lambda r, bk: r.angles["BAD"] - r.theta),
    ("m1.base_angle", "DBA = theta", lambda r, bk: r.angles["DBA"] - r.theta),
    ("m1.beta_closed_form", "GEB = 90 - 3*theta/2", lambda r, bk: r.beta - (90 - 3 * r.theta / 2)),
    ("m1.hbe_closed_form", "HBE = 60 - theta", lambda r, bk: r.hbe - (60 - r.theta)),
    ("m1.hbe_two_thirds", "HBE = 2/3 * GEB", lambda r, bk: r.hbe - 2 * r.beta / 3),
    ("m1.right_angle_aeg", "AEG = 90", lambda r, bk: r.angles["AEG"] - 90),
    ("m1.equilateral_hba", "HBA = 60", lambda r, bk: r.angles["HBA"] - 60),
    (
        "m1.isosceles_fga",
        "FGA = AFG = 90 - theta/2",
        lambda r, bk: _worst(
            r.angles["FGA"] - (90 - r.theta / 2),
            r.angles["AFG"] - (90 - r.theta / 2),
        ),
    ),
    ("m1.inverse_relation", "theta = 2/3 * (90 - GEB)", lambda r, bk: r.theta - 2 * (90 - r.beta) / 3),
    ("m1.trisection", "GEB - HBE = GEB/3", lambda r, bk: (r.beta - r.hbe) - r.beta / 3),
]

_METHOD2 = [
    ("m2.placed_angle", "BAC = theta", lambda r, bk: r.angles["BAC"] - r.theta),
    ("m2.beta_closed_form", "GDA = 3*(180 - 2*theta)", lambda r, bk: r.beta - 3 * (180 - 2 * r.theta)),
    ("m2.alpha_half", "GKA = GDA/2", lambda r, bk: r.alpha - r.beta / 2),
    ("m2.eta", "EBA = 90 - theta", lambda r, bk: r.eta - (90 - r.theta)),
    ("m2.theta_from_alpha", "theta = 90 - GKA/3", lambda r, bk: r.theta - (90 - r.alpha / 3)),
    ("m2.phi_closed_form", "theta - GKA = 90 - 4/3 * GKA", lambda r, bk: r.phi - (90 - 4 * r.alpha / 3)),
    (
        "m2.central_thirds",
        "EDA = FDE = GDF = GDA/3",
        lambda r, bk: _worst(*(t - r.beta / 3 for t in r.thirds)),
    ),
    (
        "m2.inscribed_thirds",
        "EKA = FKE = GKF = GKA/3",
        lambda r, bk: _worst(*(t - r.alpha / 3 for t in r.k_thirds)),
    ),
    ("m2.isosceles_aed", "AED = theta", lambda r, bk: r.angles["AED"] - r.theta),
    ("m2.inscribed_ef", "EAF = EKF", lambda r, bk: r.angles["EAF"] - r.angles["EKF"]),
    ("m2.inscribed_gf", "GAF = GKF", lambda r, bk: r.angles["GAF"] - r.angles["GKF"]),
    ("m2.bag", "BAG = 90 - GKA", lambda r, bk: r.angles["BAG"] - (90 - r.alpha)),
    (
        "m2.trisection",
        "thirds of GDA and of GKA",
        lambda r, bk: _worst(
            *(t - r.beta / 3 for t in r.thirds),
            *(t - r.alpha / 3 for t in r.k_thirds),
        ),
    ),
]

_METHOD2_LENGTHS = [
    (
        "m2.equal_chords",
        "|AE| = |EF| = |FG|",
        lambda r, bk: _worst(_rel(r.lengths["AE"], r.lengths["EF"]), _rel(r.lengths["EF"], r.lengths["FG"])),
    ),
    ("m2.isosceles_radii", "|DA| = |DE|", lambda r, bk: _rel(r.lengths["DA"], r.lengths["DE"])),
]

_METHOD3 = [
    ("m3.placed_angle", "BOE = theta", lambda r, bk: r.angles["BOE"] - r.theta),
    ("m3.mcd_oracle", "MCD = atan(tan(theta)/3)", lambda r, bk: r.mcd - _atan_tan_third(bk, r.theta)),
    ("m3.beta_triple", "BOA = 3*MCD", lambda r, bk: r.beta - 3 * r.mcd),
    ("m3.odl_double", "ODL = 2*MCD", lambda r, bk: r.odl - 2 * r.mcd),
    ("m3.lao_double", "LAO = 2*MCD", lambda r, bk: r.angles["LAO"] - 2 * r.mcd),
    ("m3.bot_equals_mcd", "BOT = MCD", lambda r, bk: r.bot - r.mcd),
    ("m3.trisection", "BOT = BOA/3", lambda r, bk: r.bot - r.beta / 3),
]

_METHOD3_LENGTHS = [
    ("m3.isosceles_ocd", "|CD| = |OD|", lambda r, bk: _rel(r.lengths["CD"], r.lengths["OD"])),
    ("m3.radii_oa_od", "|OA| = |OD|", lambda r, bk: _rel(r.lengths["OA"], r.lengths["OD"])),
]


def _build(method: MethodId, angle_rows, length_rows=()) -> list[Claim]:
    claims = [Claim(cid, method, rel, fn) for cid, rel, fn in angle_rows]
    claims += [Claim(cid, method, rel, fn, kind=LENGTH) for cid, rel, fn in length_rows]
    return claims


CLAIMS: dict[MethodId, list[Claim]] = {
    MethodId.METHOD1: _build(MethodId.METHOD1, _METHOD1),
    MethodId.METHOD2: _build(MethodId.METHOD2, _METHOD2, _METHOD2_LENGTHS),
    MethodId.METHOD3: _build(MethodId.METHOD3, _METHOD3, _METHOD3_LENGTHS),
}

TRISECTION_CLAIMS: dict[MethodId, str] = {
    MethodId.METHOD1: "m1.trisection",
    MethodId.METHOD2: "m2.trisection",
    MethodId.METHOD3: "m3.trisection",
}


def claims_for(method: MethodId) -> list[Claim]:
    return list(CLAIMS[MethodId(method)])


def get_claim(claim_id: str) -> Claim:
    for claims in CLAIMS.values():
        for claim in claims:
            if claim.id == claim_id:
                return claim
    raise KeyError(f"unknown claim {claim_id!r}")


def evaluate_claim(claim: Claim, report: MethodReport, backend: Backend, tolerances: Tolerances | None = None) -> ClaimResult:
    tolerances = tolerances or Tolerances.from_config()
    tol = claim.tolerance
    if tol is None:
        tol = tolerances.angle_deg if claim.kind == ANGLE else tolerances.length_rel
    residual = claim.residual(report, backend)
    return ClaimResult(
        claim_id=claim.id,
        method=claim.method,
        theta=report.theta,
        residual=residual,
        tolerance=tol,
        passed=bool(abs(residual) <= tol),
        kind=claim.kind,
    )
