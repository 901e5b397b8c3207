"""
Point counts of good reductions, ordinarity, anomaly and certified triviality of p-torsion.

Counting completes the square: for odd l, (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6,
so #E(F_l) = 1 + sum over x of (1 + chi(f(x))) with chi read from a table of squares.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from sympy import isprime, primerange

from ..constants import POINT_COUNT_BOUND, TORSION_SEARCH_BOUND
from ..exceptions import BadReductionError, InputValidationError
from .tate import minimal_model
from .weierstrass import WeierstrassCurve

logger = logging.getLogger(__name__)

__all__ = [
    "ReductionCount",
    "TorsionStatus",
    "count_points",
    "is_good_ordinary",
    "is_anomalous",
    "torsion_p_trivial",
]


@dataclass(frozen=True)
class ReductionCount:
    """#E~(F_l) and the trace a_l = l + 1 - #E~(F_l)."""

    prime: int
    count: int
    trace: int

    def __post_init__(self) -> None:
        assert self.trace == self.prime + 1 - self.count, "trace must equal l + 1 - count"


class TorsionStatus(str, Enum):
    CERTIFIED_TRIVIAL = "certified-trivial"
    UNKNOWN = "unknown"


@lru_cache(maxsize=64)
def _square_table(ell: int) -> bytes:
    table = bytearray(ell)
    for y in range(ell):
        table[y * y % ell] = 1
    return bytes(table)


def _count_on_model(E: WeierstrassCurve, ell: int) -> int:
    if ell == 2:
        a1, a2, a3, a4, a6 = E.ainvs
        affine = sum(
            1
            for x in range(2)
            for y in range(2)
            if (y * y + a1 * x * y + a3 * y - x**3 - a2 * x * x - a4 * x - a6) % 2 == 0
        )
        return affine + 1
    squares = _square_table(ell)
    c3, c2, c1, c0 = (c % ell for c in E.two_division_cubic())
    total = 1
    for x in range(ell):
        v = (((c3 * x + c2) * x + c1) * x + c0) % ell
        if v == 0:
            total += 1
        elif squares[v]:
            total += 2
    return total


@lru_cache(maxsize=8192)
def count_points(E: WeierstrassCurve, ell: int, bound: int = POINT_COUNT_BOUND) -> ReductionCount:
    """
    Count points of the reduction of the minimal model of E at ell.

    Raises:
        BadReductionError: If the minimal model has bad reduction at ell
        InputValidationError: If ell is not a prime or exceeds ``bound``
    """
    if not isprime(ell):
        raise InputValidationError(f"{ell} is not prime", details={"ell": ell})
    if ell > bound:
        raise InputValidationError(
            f"{ell} exceeds the point-counting bound {bound}",
            details={"ell": ell, "bound": bound},
        )
    Emin = minimal_model(E)
    if Emin.discriminant % ell == 0:
        raise BadReductionError(
            f"bad reduction at {ell}", details={"ell": ell, "ainvs": list(Emin.ainvs)}
        )
    count = _count_on_model(Emin, ell)
    return ReductionCount(prime=ell, count=count, trace=ell + 1 - count)


def is_good_ordinary(E: WeierstrassCurve, p: int) -> bool:
    """Good reduction at p with a_p not divisible by p. Raises BadReductionError at bad p."""
    return count_points(E, p).trace % p != 0


def is_anomalous(E: WeierstrassCurve, p: int) -> bool:
    """p divides #E~(F_p), equivalently a_p = 1 mod p. Raises BadReductionError at bad p."""
    return count_points(E, p).count % p == 0


def torsion_p_trivial(
    E: WeierstrassCurve, p: int, bound: int = TORSION_SEARCH_BOUND
) -> TorsionStatus:
    """
    Certify E(Q)[p] = 0 from one good prime l (not 2, not p) with p not dividing #E~(F_l).

    Torsion prime to l injects into E~(F_l). Never claims nontrivial torsion.
    """
    Emin = minimal_model(E)
    for ell in primerange(3, bound):
        if ell == p or Emin.discriminant % ell == 0:
            continue
        if count_points(Emin, ell).count % p != 0:
            logger.debug(f"E(Q)[{p}] = 0 certified by #E(F_{ell})")
            return TorsionStatus.CERTIFIED_TRIVIAL
    return TorsionStatus.UNKNOWN
