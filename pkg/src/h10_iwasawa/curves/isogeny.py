"""Real points of the kernel of a rational 3-isogeny, on E and on its quadratic twists."""

from enum import Enum
from fractions import Fraction
from typing import Optional, Union

from ..exceptions import MissingIsogenyError
from .weierstrass import WeierstrassCurve

__all__ = ["KernelRealPoints", "kernel_real_points"]


class KernelRealPoints(str, Enum):
    Z3 = "Z/3"
    TRIVIAL = "trivial"


def kernel_real_points(
    E: WeierstrassCurve,
    x0: Optional[Union[int, Fraction, str]],
    d: int = 1,
) -> KernelRealPoints:
    """
    Real points of ker(phi) on E^(d), where x0 is the kernel x-coordinate on E's model.

    On the twist the kernel points satisfy (2y + a1 x + a3)^2 = d f(x0) with f the
    2-division cubic, so they are real iff d f(x0) >= 0.

    Raises:
        MissingIsogenyError: If no kernel x-coordinate is supplied
    """
    if x0 is None:
        raise MissingIsogenyError(
            "no 3-isogeny kernel data for this curve", details={"ainvs": list(E.ainvs)}
        )
    value = E.evaluate_two_division(Fraction(x0))
    return KernelRealPoints.Z3 if d * value >= 0 else KernelRealPoints.TRIVIAL
