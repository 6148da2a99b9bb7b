"""Method identifiers and the open theta intervals each construction is defined on."""
from enum import Enum


class ThetaOutOfRange(ValueError):
    pass


class TargetOutOfRange(ValueError):
    pass


class MethodId(str, Enum):
    METHOD1 = "method1_equilateral"
    METHOD2 = "method2_central"
    METHOD3 = "method3_similar"

    @property
    def short(self) -> str:
        return self.value.split("_", 1)[0]

    @classmethod
    def parse(cls, text: str) -> "MethodId":
        """Accept the full id ("method2_central") or its short alias ("method2")."""
        key = (text or "").strip().lower()
        for member in cls:
            if key in (member.value, member.short):
                return member
        names = ", ".join(m.short for m in cls)
        raise ValueError(f"unknown method {text!r} (expected one of {names})")


# open intervals, degrees
VALID_INTERVALS: dict[MethodId, tuple[int, int]] = {
    MethodId.METHOD1: (0, 60),
    MethodId.METHOD2: (60, 90),
    MethodId.METHOD3: (0, 90),
}
# method1 with G beyond B and E outside triangle HAB
EXTERIOR_INTERVAL = (60, 90)


def valid_interval(method: MethodId, exterior: bool = False) -> tuple[int, int]:
    if exterior:
        if method is not MethodId.METHOD1:
            raise ValueError(f"the exterior case only exists for {MethodId.METHOD1.short}")
        return EXTERIOR_INTERVAL
    return VALID_INTERVALS[method]


def check_theta(method: MethodId, theta, exterior: bool = False) -> None:
    lo, hi = valid_interval(method, exterior)
    if not lo < theta < hi:
        raise ThetaOutOfRange(f"{method.short}: theta={float(theta):.12g} is outside ({lo}, {hi})")
