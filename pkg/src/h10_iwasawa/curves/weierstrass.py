"""
Long Weierstrass models y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Z.

Standard invariants:
    b2 = a1^2 + 4 a2          b4 = 2 a4 + a1 a3        b6 = a3^2 + 4 a6
    b8 = a1^2 a6 + 4 a2 a6 - a1 a3 a4 + a2 a3^2 - a4^2
    c4 = b2^2 - 24 b4         c6 = -b2^3 + 36 b2 b4 - 216 b6
    Delta = -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6,   c4^3 - c6^2 = 1728 Delta

Curves serialize as the JSON list [a1, a2, a3, a4, a6].
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import List, Sequence, Tuple

from sympy import factorint

from ..exceptions import InputValidationError, SingularCurveError

__all__ = [
    "WeierstrassCurve",
    "discriminant_c4_c6",
    "quadratic_twist",
    "from_c4_c6",
    "is_squarefree",
]


@dataclass(frozen=True)
class WeierstrassCurve:
    """
    An elliptic curve over Q given by an integral long Weierstrass model.

    Raises:
        SingularCurveError: If the discriminant is zero
        InputValidationError: If a coefficient is not an integer
    """

    a1: int
    a2: int
    a3: int
    a4: int
    a6: int

    def __post_init__(self) -> None:
        for name in ("a1", "a2", "a3", "a4", "a6"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise InputValidationError(
                    f"Weierstrass coefficient {name} must be an integer, got {value!r}",
                    details={"field": name, "value": repr(value)},
                )
        if self.discriminant == 0:
            raise SingularCurveError(
                "discriminant is zero", details={"ainvs": list(self.ainvs)}
            )

    @classmethod
    def from_ainvs(cls, ainvs: Sequence[int]) -> "WeierstrassCurve":
        if len(ainvs) != 5:
            raise InputValidationError(
                f"Expected five a-invariants, got {len(ainvs)}", details={"ainvs": list(ainvs)}
            )
        return cls(*(int(a) for a in ainvs))

    @property
    def ainvs(self) -> Tuple[int, int, int, int, int]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def to_json(self) -> List[int]:
        return list(self.ainvs)

    # ------------------------------------------------------------------
    # Invariants
    # ------------------------------------------------------------------

    @cached_property
    def b_invariants(self) -> Tuple[int, int, int, int]:
        a1, a2, a3, a4, a6 = self.ainvs
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    @cached_property
    def c_invariants(self) -> Tuple[int, int]:
        b2, b4, b6, _ = self.b_invariants
        return b2 * b2 - 24 * b4, -(b2**3) + 36 * b2 * b4 - 216 * b6

    @cached_property
    def discriminant(self) -> int:
        b2, b4, b6, b8 = self.b_invariants
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    @property
    def c4(self) -> int:
        return self.c_invariants[0]

    @property
    def c6(self) -> int:
        return self.c_invariants[1]

    @property
    def j_invariant(self) -> Fraction:
        return Fraction(self.c4**3, self.discriminant)

    @cached_property
    def bad_primes(self) -> Tuple[int, ...]:
        """Primes dividing the discriminant of this model, ascending."""
        return tuple(sorted(factorint(abs(self.discriminant))))

    # ------------------------------------------------------------------
    # Changes of model
    # ------------------------------------------------------------------

    def rst_transform(self, r: int, s: int, t: int) -> "WeierstrassCurve":
        """Model after x = x' + r, y = y' + s x' + t."""
        a1, a2, a3, a4, a6 = self.ainvs
        return WeierstrassCurve(
            a1 + 2 * s,
            a2 - s * a1 + 3 * r - s * s,
            a3 + r * a1 + 2 * t,
            a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t,
            a6 + r * a4 + r * r * a2 + r**3 - t * a3 - t * t - r * t * a1,
        )

    def scale_down(self, u: int) -> "WeierstrassCurve":
        """Model with a_i / u^i; every division must be exact."""
        out = []
        for i, a in zip((1, 2, 3, 4, 6), self.ainvs):
            q, rem = divmod(a, u**i)
            if rem:
                raise InputValidationError(
                    f"a{i} is not divisible by u^{i}", details={"u": u, "ainvs": list(self.ainvs)}
                )
            out.append(q)
        return WeierstrassCurve(*out)

    def short_model(self) -> "WeierstrassCurve":
        """The integral short model y^2 = x^3 - 27 c4 x - 54 c6."""
        return WeierstrassCurve(0, 0, 0, -27 * self.c4, -54 * self.c6)

    def two_division_cubic(self) -> Tuple[int, int, int, int]:
        """Coefficients of 4x^3 + b2 x^2 + 2 b4 x + b6, highest degree first."""
        b2, b4, b6, _ = self.b_invariants
        return (4, b2, 2 * b4, b6)

    def evaluate_two_division(self, x: Fraction) -> Fraction:
        c3, c2, c1, c0 = self.two_division_cubic()
        return ((c3 * x + c2) * x + c1) * x + c0

    def __str__(self) -> str:
        return str(list(self.ainvs))


def discriminant_c4_c6(E: WeierstrassCurve) -> Tuple[int, int, int]:
    """(Delta, c4, c6) of the model."""
    return E.discriminant, E.c4, E.c6


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    return all(e == 1 for e in factorint(abs(n)).values())


def quadratic_twist(E: WeierstrassCurve, d: int) -> WeierstrassCurve:
    """
    The quadratic twist E^(d).

    A short model y^2 = x^3 + A x + B twists to y^2 = x^3 + A d^2 x + B d^3. A long
    model is first written as y^2 = x^3 + b2 x^2 + 8 b4 x + 16 b6 and twisted to
    y^2 = x^3 + d b2 x^2 + 8 d^2 b4 x + 16 d^3 b6. The result is not minimized.

    Raises:
        InputValidationError: If d is 0, 1 or not squarefree
    """
    if d in (0, 1) or not is_squarefree(d):
        raise InputValidationError(
            f"Twist parameter must be squarefree and not 0 or 1, got {d}", details={"d": d}
        )
    if E.a1 == 0 and E.a2 == 0 and E.a3 == 0:
        return WeierstrassCurve(0, 0, 0, E.a4 * d * d, E.a6 * d**3)
    b2, b4, b6, _ = E.b_invariants
    return WeierstrassCurve(0, d * b2, 0, 8 * d * d * b4, 16 * d**3 * b6)


def from_c4_c6(c4: int, c6: int) -> WeierstrassCurve:
    """
    The reduced integral model (a1, a3 in {0, 1}, a2 in {-1, 0, 1}) with invariants c4, c6.

    b2 is the representative of -c6 mod 12 in [-5, 6]; then b4 = (b2^2 - c4) / 24 and
    b6 = (-b2^3 + 36 b2 b4 - c6) / 216.

    Raises:
        InputValidationError: If (c4, c6) do not come from an integral model
    """
    b2 = (-c6) % 12
    if b2 > 6:
        b2 -= 12
    b4, r4 = divmod(b2 * b2 - c4, 24)
    b6, r6 = divmod(-(b2**3) + 36 * b2 * b4 - c6, 216)
    a1 = b2 % 2
    a3 = b6 % 2
    a2, r2 = divmod(b2 - a1, 4)
    a4, r4b = divmod(b4 - a1 * a3, 2)
    a6, r6b = divmod(b6 - a3, 4)
    if r4 or r6 or r2 or r4b or r6b:
        raise InputValidationError(
            "c4, c6 are not the invariants of an integral model",
            details={"c4": c4, "c6": c6},
        )
    return WeierstrassCurve(a1, a2, a3, a4, a6)
