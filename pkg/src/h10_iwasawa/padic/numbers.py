"""
Capped-precision p-adic integers, prime-field elements and the projective line over F_p.

A ``PadicNumber`` is an element of Z_p known modulo p^N. Residues are Python ints, so
p^N never overflows. Every operation returns a new value; nothing mutates.

Example:
    >>> x = PadicNumber(3, 4, 5)
    >>> (x * 17).residue
    4
    >>> padic_invert(PadicNumber(3, 2, 2)).residue
    5
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Literal, Tuple, Union

from sympy import isprime

from ..exceptions import (
    InputValidationError,
    NotInvertibleError,
    PrecisionLossError,
    PrimeMismatchError,
)

__all__ = [
    "AtLeast",
    "Valuation",
    "PadicNumber",
    "FpElement",
    "ProjectiveLineFp",
    "Scalar",
    "require_odd_prime",
    "to_padic",
    "padic_arith",
    "padic_invert",
    "valuation",
]


@dataclass(frozen=True, slots=True, order=True)
class AtLeast:
    """Valuation of a residue that is zero to the working precision: "at least ``bound``"."""

    bound: int

    def __str__(self) -> str:
        return f">={self.bound}"


Valuation = Union[int, AtLeast]


@lru_cache(maxsize=512)
def require_odd_prime(p: int) -> int:
    """Return ``p`` if it is an odd prime, else raise InputValidationError."""
    if p < 3 or not isprime(p):
        raise InputValidationError(f"Expected an odd prime, got {p}", details={"p": p})
    return p


def _int_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@dataclass(frozen=True, slots=True)
class PadicNumber:
    """
    Element of Z_p modulo p^precision.

    Attributes:
        prime: Odd prime p
        precision: Number of known digits N (>= 1)
        residue: Representative in [0, p^N); normalized on construction
    """

    prime: int
    precision: int
    residue: int = 0
    modulus: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        require_odd_prime(self.prime)
        if self.precision < 1:
            raise PrecisionLossError(
                "precision must be at least one digit",
                details={"prime": self.prime, "precision": self.precision},
            )
        modulus = self.prime**self.precision
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "residue", self.residue % modulus)

    @classmethod
    def from_rational(
        cls, value: Union[int, Fraction], prime: int, precision: int
    ) -> "PadicNumber":
        """Embed an integer or p-integral rational into Z_p / p^N."""
        if isinstance(value, int):
            return cls(prime, precision, value)
        frac = Fraction(value)
        if frac.denominator % prime == 0:
            raise NotInvertibleError(
                f"{frac} is not {prime}-integral",
                details={"value": str(frac), "prime": prime},
            )
        modulus = prime**precision
        return cls(prime, precision, frac.numerator * pow(frac.denominator, -1, modulus))

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    def valuation(self) -> Valuation:
        """Largest v < N with p^v dividing the residue, or ``AtLeast(N)`` for zero."""
        if self.residue == 0:
            return AtLeast(self.precision)
        return _int_valuation(self.residue, self.prime)

    @property
    def is_zero(self) -> bool:
        return self.residue == 0

    @property
    def is_unit(self) -> bool:
        return self.residue % self.prime != 0

    def reduce(self) -> "FpElement":
        """Image in F_p."""
        return FpElement(self.prime, self.residue)

    def with_precision(self, precision: int) -> "PadicNumber":
        """Drop to a lower precision (never raises it)."""
        return PadicNumber(self.prime, min(precision, self.precision), self.residue)

    def signed(self) -> int:
        """Representative in (-p^N/2, p^N/2]."""
        r = self.residue
        return r - self.modulus if r > self.modulus // 2 else r

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _coerce(self, other: "Scalar") -> "PadicNumber":
        if isinstance(other, PadicNumber):
            if other.prime != self.prime:
                raise PrimeMismatchError(
                    f"cannot combine {self.prime}-adic and {other.prime}-adic numbers",
                    details={"left": self.prime, "right": other.prime},
                )
            return other
        if isinstance(other, (int, Fraction)):
            return PadicNumber.from_rational(other, self.prime, self.precision)
        return NotImplemented  # type: ignore[return-value]

    def _combine(self, other: "Scalar", op: str) -> "PadicNumber":
        rhs = self._coerce(other)
        if rhs is NotImplemented:  # type: ignore[comparison-overlap]
            return NotImplemented  # type: ignore[return-value]
        n = min(self.precision, rhs.precision)
        if op == "add":
            value = self.residue + rhs.residue
        elif op == "sub":
            value = self.residue - rhs.residue
        else:
            value = self.residue * rhs.residue
        return PadicNumber(self.prime, n, value)

    def __add__(self, other: "Scalar") -> "PadicNumber":
        return self._combine(other, "add")

    def __radd__(self, other: "Scalar") -> "PadicNumber":
        return self._combine(other, "add")

    def __sub__(self, other: "Scalar") -> "PadicNumber":
        return self._combine(other, "sub")

    def __rsub__(self, other: "Scalar") -> "PadicNumber":
        return (-self)._combine(other, "add")

    def __mul__(self, other: "Scalar") -> "PadicNumber":
        return self._combine(other, "mul")

    def __rmul__(self, other: "Scalar") -> "PadicNumber":
        return self._combine(other, "mul")

    def __neg__(self) -> "PadicNumber":
        return PadicNumber(self.prime, self.precision, -self.residue)

    def __truediv__(self, other: "Scalar") -> "PadicNumber":
        rhs = self._coerce(other)
        return self * rhs.inverse()

    def __pow__(self, exponent: int) -> "PadicNumber":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return PadicNumber(self.prime, self.precision, pow(self.residue, exponent, self.modulus))

    def inverse(self) -> "PadicNumber":
        """Multiplicative inverse of a unit."""
        if not self.is_unit:
            raise NotInvertibleError(
                "not invertible at this precision",
                details={
                    "prime": self.prime,
                    "precision": self.precision,
                    "residue": self.residue,
                },
            )
        return PadicNumber(self.prime, self.precision, pow(self.residue, -1, self.modulus))

    def __str__(self) -> str:
        return f"{self.residue} + O({self.prime}^{self.precision})"


Scalar = Union[int, Fraction, PadicNumber]


def to_padic(value: Scalar, prime: int, precision: int) -> PadicNumber:
    """Coerce an int, p-integral Fraction or PadicNumber to Z_p / p^precision."""
    if isinstance(value, PadicNumber):
        if value.prime != prime:
            raise PrimeMismatchError(
                f"expected a {prime}-adic number, got {value.prime}-adic",
                details={"expected": prime, "got": value.prime},
            )
        return value.with_precision(precision)
    return PadicNumber.from_rational(value, prime, precision)


def padic_arith(
    x: PadicNumber, y: PadicNumber, op: Literal["add", "sub", "mul"]
) -> PadicNumber:
    """Add, subtract or multiply; the result has the smaller of the two precisions.

    Raises:
        PrimeMismatchError: If x and y live over different primes
        InputValidationError: If op is not add/sub/mul
    """
    if op not in ("add", "sub", "mul"):
        raise InputValidationError(f"Unknown operation {op!r}", details={"op": op})
    if x.prime != y.prime:
        raise PrimeMismatchError(
            f"cannot combine {x.prime}-adic and {y.prime}-adic numbers",
            details={"left": x.prime, "right": y.prime},
        )
    return x._combine(y, op)


def padic_invert(x: PadicNumber) -> PadicNumber:
    """Inverse of a unit modulo p^N.

    Raises:
        NotInvertibleError: If x is divisible by p
    """
    return x.inverse()


def valuation(x: PadicNumber) -> Valuation:
    """Valuation of x: an int below its precision, or ``AtLeast(N)`` when x is 0 mod p^N."""
    return x.valuation()


@dataclass(frozen=True, slots=True)
class FpElement:
    """Element of the prime field F_p."""

    prime: int
    value: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", self.value % self.prime)

    def _other(self, other: Union[int, "FpElement"]) -> int:
        if isinstance(other, FpElement):
            if other.prime != self.prime:
                raise PrimeMismatchError(
                    f"cannot combine F_{self.prime} and F_{other.prime}",
                    details={"left": self.prime, "right": other.prime},
                )
            return other.value
        return other

    def __add__(self, other: Union[int, "FpElement"]) -> "FpElement":
        return FpElement(self.prime, self.value + self._other(other))

    def __sub__(self, other: Union[int, "FpElement"]) -> "FpElement":
        return FpElement(self.prime, self.value - self._other(other))

    def __mul__(self, other: Union[int, "FpElement"]) -> "FpElement":
        return FpElement(self.prime, self.value * self._other(other))

    def __neg__(self) -> "FpElement":
        return FpElement(self.prime, -self.value)

    def __bool__(self) -> bool:
        return self.value != 0

    def inverse(self) -> "FpElement":
        if self.value == 0:
            raise NotInvertibleError("zero has no inverse in F_p", details={"prime": self.prime})
        return FpElement(self.prime, pow(self.value, -1, self.prime))

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True, slots=True)
class ProjectiveLineFp:
    """
    Point (a : b) of P^1(F_p), normalized so that a = 1, or a = 0 and b = 1.

    Use ``ProjectiveLineFp.from_pair`` to build one from any nonzero pair.
    """

    a: FpElement
    b: FpElement

    def __post_init__(self) -> None:
        if self.a.prime != self.b.prime:
            raise PrimeMismatchError(
                "coordinates over different primes",
                details={"left": self.a.prime, "right": self.b.prime},
            )
        if not self.a and not self.b:
            raise InputValidationError("(0 : 0) is not a point of P^1", details={})
        if self.a:
            if self.a.value != 1:
                inv = self.a.inverse()
                object.__setattr__(self, "b", self.b * inv)
                object.__setattr__(self, "a", FpElement(self.a.prime, 1))
        elif self.b.value != 1:
            object.__setattr__(self, "b", FpElement(self.b.prime, 1))

    @classmethod
    def from_pair(cls, a: int, b: int, prime: int) -> "ProjectiveLineFp":
        return cls(FpElement(prime, a), FpElement(prime, b))

    @classmethod
    def all_lines(cls, prime: int) -> Iterator["ProjectiveLineFp"]:
        """The p + 1 points: (1 : t) for t in F_p, then (0 : 1)."""
        for t in range(prime):
            yield cls.from_pair(1, t, prime)
        yield cls.from_pair(0, 1, prime)

    @property
    def prime(self) -> int:
        return self.a.prime

    def representative(self) -> Tuple[int, int]:
        """Integer lift (a, b) of the normalized coordinates."""
        return self.a.value, self.b.value

    def __str__(self) -> str:
        return f"({self.a.value}:{self.b.value})"
