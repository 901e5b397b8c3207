"""
Imaginary quadratic fields Q(sqrt(d)), keyed by the squarefree d.

Example:
    >>> K = make_field(-7)
    >>> K.disc, splitting(K, 2)
    (-7, <Splitting.SPLIT: 'split'>)
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict

from sympy import factorint

from .exceptions import InputValidationError
from .padic import kronecker_symbol

__all__ = [
    "ImagQuadField",
    "Splitting",
    "make_field",
    "field_from_discriminant",
    "fundamental_discriminant",
    "squarefree_part",
    "splitting",
]


class Splitting(str, Enum):
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"


def squarefree_part(n: int) -> int:
    """n with every square factor removed, sign kept."""
    if n == 0:
        raise InputValidationError("0 has no squarefree part", details={"n": n})
    core = 1
    for q, e in factorint(abs(n)).items():
        if e % 2:
            core *= q
    return core if n > 0 else -core


def fundamental_discriminant(d: int) -> int:
    """Discriminant of Q(sqrt(d)) for squarefree d: d if d = 1 mod 4, else 4d."""
    return d if d % 4 == 1 else 4 * d


@dataclass(frozen=True)
class ImagQuadField:
    """
    Q(sqrt(d)) with d < 0 squarefree.

    Attributes:
        d: Negative squarefree integer
        disc: Fundamental discriminant (d or 4d)
        height: |d|
    """

    d: int

    def __post_init__(self) -> None:
        if self.d >= 0 or squarefree_part(self.d) != self.d:
            raise InputValidationError(
                f"Expected a negative squarefree integer, got {self.d}", details={"d": self.d}
            )

    @property
    def disc(self) -> int:
        return fundamental_discriminant(self.d)

    @property
    def height(self) -> int:
        return abs(self.d)

    def to_dict(self) -> Dict[str, Any]:
        return {"d": self.d, "disc": self.disc, "height": self.height}

    def __str__(self) -> str:
        return f"Q(sqrt({self.d}))"


def make_field(d: int) -> ImagQuadField:
    """
    Q(sqrt(d)) for any negative integer d; square factors are removed first.

    Raises:
        InputValidationError: If d >= 0
    """
    if d >= 0:
        raise InputValidationError(
            f"Imaginary quadratic fields need d < 0, got {d}", details={"d": d}
        )
    return ImagQuadField(squarefree_part(d))


def field_from_discriminant(disc: int) -> ImagQuadField:
    """Inverse of ``ImagQuadField.disc``: accepts -7, -8, -4, -3, -23, -55, ..."""
    if disc >= 0 or disc % 4 not in (0, 1):
        raise InputValidationError(
            f"{disc} is not a negative discriminant", details={"disc": disc}
        )
    d = disc if disc % 4 == 1 else disc // 4
    K = make_field(d)
    if K.disc != disc:
        raise InputValidationError(
            f"{disc} is not a fundamental discriminant", details={"disc": disc}
        )
    return K


def splitting(K: ImagQuadField, ell: int) -> Splitting:
    """Behaviour of the prime ell in K, from the Kronecker symbol (disc / ell)."""
    symbol = kronecker_symbol(K.disc, ell)
    if symbol == 1:
        return Splitting.SPLIT
    if symbol == -1:
        return Splitting.INERT
    return Splitting.RAMIFIED
