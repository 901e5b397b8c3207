"""
Tate's algorithm: Kodaira symbol, conductor exponent and Tamagawa number at a prime,
plus the global minimal model and conductor built from it.

The case analysis follows the classical description (Tate, as organized by Cremona):
translate so that p | a3, a4, a6; decide multiplicative reduction from p | c4; then walk
the additive types II, III, IV, I0*, I_m*, IV*, III*, II*, rescaling a non-minimal
model by p and starting over.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Any, Dict, Iterable, Tuple

from sympy import Poly, symbols
from sympy.ntheory import is_quad_residue

from ..constants import (
    KODAIRA_GOOD,
    KODAIRA_I0_STAR,
    KODAIRA_II,
    KODAIRA_II_STAR,
    KODAIRA_III,
    KODAIRA_III_STAR,
    KODAIRA_IV,
    KODAIRA_IV_STAR,
)
from .weierstrass import WeierstrassCurve, from_c4_c6

logger = logging.getLogger(__name__)

__all__ = [
    "ReductionType",
    "LocalData",
    "tate_algorithm",
    "minimal_model",
    "conductor",
    "tamagawa_numbers",
    "tamagawa_product",
]

_T = symbols("T")


class ReductionType(str, Enum):
    GOOD = "good"
    SPLIT = "split multiplicative"
    NONSPLIT = "nonsplit multiplicative"
    ADDITIVE = "additive"


@dataclass(frozen=True)
class LocalData:
    """
    Local data of E at a prime.

    Attributes:
        prime: The prime
        reduction: Reduction class
        kodaira: Kodaira symbol ("I0", "I5", "II", "I1*", "IV*", ...)
        tamagawa: Tamagawa number c_p
        conductor_exponent: Exponent f_p of p in the conductor
        discriminant_valuation: v_p of the minimal discriminant
        minimal_model: A model minimal at p
    """

    prime: int
    reduction: ReductionType
    kodaira: str
    tamagawa: int
    conductor_exponent: int
    discriminant_valuation: int
    minimal_model: WeierstrassCurve

    def to_dict(self) -> Dict[str, Any]:
        return {
            "prime": self.prime,
            "reduction": self.reduction.value,
            "kodaira": self.kodaira,
            "tamagawa": self.tamagawa,
            "conductor_exponent": self.conductor_exponent,
        }


def _val(x: int, p: int) -> int:
    """p-adic valuation of a nonzero integer; zero counts as infinitely divisible."""
    if x == 0:
        return 10**9
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def _quad_has_root(a: int, b: int, c: int, p: int) -> bool:
    """True iff a x^2 + b x + c has a root mod p."""
    a, b, c = a % p, b % p, c % p
    if a == 0:
        return b != 0 or c == 0
    if p == 2:
        return c == 0 or (a + b + c) % 2 == 0
    return bool(is_quad_residue((b * b - 4 * a * c) % p, p))


def _cubic_root_count(b: int, c: int, d: int, p: int) -> int:
    """Number of roots of T^3 + b T^2 + c T + d in F_p (distinct roots assumed)."""
    poly = Poly(_T**3 + b * _T**2 + c * _T + d, _T, modulus=p)
    _, factors = poly.factor_list()
    return sum(mult for f, mult in factors if f.degree() == 1)


def _half(p: int) -> int:
    return (p + 1) // 2


@lru_cache(maxsize=4096)
def tate_algorithm(E: WeierstrassCurve, p: int) -> LocalData:
    """
    Local data of E at the prime p.

    Multiplicative reduction is split when the tangent slopes at the node, the roots
    of T^2 + a1 T - a2 after moving the node to (0, 0), lie in F_p.
    """
    C = E
    while True:
        a1, a2, a3, a4, a6 = C.ainvs
        b2, b4, b6, b8 = C.b_invariants
        c4 = C.c4
        vD = _val(C.discriminant, p)
        if vD == 0:
            return LocalData(p, ReductionType.GOOD, KODAIRA_GOOD, 1, 0, 0, C)

        # move the singular point to (0, 0)
        if p == 2:
            if b2 % 2 == 0:
                r = a4 % 2
                t = (r * (1 + a2 + a4) + a6) % 2
            else:
                r = a3 % 2
                t = (r + a4) % 2
        elif p == 3:
            r = (-b6) % 3 if b2 % 3 == 0 else (-b2 * b4) % 3
            t = (a1 * r + a3) % 3
        else:
            if c4 % p == 0:
                r = (-b2 * pow(12, -1, p)) % p
            else:
                r = (-(C.c6 + b2 * c4) * pow(12 * c4, -1, p)) % p
            t = (-(a1 * r + a3) * _half(p)) % p
        C = C.rst_transform(r, 0, t)
        a1, a2, a3, a4, a6 = C.ainvs
        b2, b4, b6, b8 = C.b_invariants

        if c4 % p != 0:
            if _quad_has_root(1, a1, -a2, p):
                return LocalData(p, ReductionType.SPLIT, f"I{vD}", vD, 1, vD, C)
            cp = 1 if vD % 2 else 2
            return LocalData(p, ReductionType.NONSPLIT, f"I{vD}", cp, 1, vD, C)

        if _val(a6, p) < 2:
            return LocalData(p, ReductionType.ADDITIVE, KODAIRA_II, 1, vD, vD, C)
        if _val(b8, p) < 3:
            return LocalData(p, ReductionType.ADDITIVE, KODAIRA_III, 2, vD - 1, vD, C)
        if _val(b6, p) < 3:
            cp = 3 if _quad_has_root(1, a3 // p, -(a6 // p**2), p) else 1
            return LocalData(p, ReductionType.ADDITIVE, KODAIRA_IV, cp, vD - 2, vD, C)

        # now p | a1, a2; p^2 | a3, a4; p^3 | a6
        if p == 2:
            s = a2 % 2
            t = 2 * ((a6 // 4) % 2)
        elif p == 3:
            s, t = a1, a3
        else:
            s = -a1 * _half(p)
            t = -a3 * _half(p)
        C = C.rst_transform(0, s, t)
        a1, a2, a3, a4, a6 = C.ainvs

        # roots of T^3 + b T^2 + c T + d mod p
        b, c, d = a2 // p, a4 // p**2, a6 // p**3
        w = 27 * d * d - b * b * c * c + 4 * b**3 * d - 18 * b * c * d + 4 * c**3
        x = 3 * c - b * b

        if w % p != 0:
            cp = 1 + _cubic_root_count(b, c, d, p)
            return LocalData(p, ReductionType.ADDITIVE, KODAIRA_I0_STAR, cp, vD - 4, vD, C)

        if x % p != 0:
            # double root: move it to T = 0
            if p == 2:
                r = c
            elif p == 3:
                r = b * c
            else:
                r = (b * c - 9 * d) * pow(2 * x, -1, p)
            C = C.rst_transform(p * (r % p), 0, 0)
            ix, iy = 3, 3
            mx = my = p * p
            while True:
                a1, a2, a3, a4, a6 = C.ainvs
                a2t, a3t, a4t, a6t = a2 // p, a3 // my, a4 // (p * mx), a6 // (mx * my)
                if (a3t * a3t + 4 * a6t) % p == 0:
                    if p == 2:
                        t = my * (a6t % 2)
                    else:
                        t = my * ((-a3t * _half(p)) % p)
                    C = C.rst_transform(0, 0, t)
                    my *= p
                    iy += 1
                    a1, a2, a3, a4, a6 = C.ainvs
                    a2t, a3t, a4t, a6t = a2 // p, a3 // my, a4 // (p * mx), a6 // (mx * my)
                    if (a4t * a4t - 4 * a6t * a2t) % p == 0:
                        if p == 2:
                            r = mx * ((a6t * a2t) % 2)
                        else:
                            r = mx * ((-a4t * pow(2 * a2t, -1, p)) % p)
                        C = C.rst_transform(r, 0, 0)
                        mx *= p
                        ix += 1
                    else:
                        cp = 4 if _quad_has_root(a2t, a4t, a6t, p) else 2
                        break
                else:
                    cp = 4 if _quad_has_root(1, a3t, -a6t, p) else 2
                    break
            m = ix + iy - 5
            return LocalData(p, ReductionType.ADDITIVE, f"I{m}*", cp, vD - m - 4, vD, C)

        # triple root: move it to T = 0
        if p == 2:
            r = b
        elif p == 3:
            r = -d
        else:
            r = -b * pow(3, -1, p)
        C = C.rst_transform(p * (r % p), 0, 0)
        a1, a2, a3, a4, a6 = C.ainvs
        x3t, x6t = a3 // p**2, a6 // p**4
        if (x3t * x3t + 4 * x6t) % p != 0:
            cp = 3 if _quad_has_root(1, x3t, -x6t, p) else 1
            return LocalData(p, ReductionType.ADDITIVE, KODAIRA_IV_STAR, cp, vD - 6, vD, C)

        if p == 2:
            t = -4 * (x6t % 2)
        else:
            t = p * p * ((-x3t * _half(p)) % p)
        C = C.rst_transform(0, 0, t)
        a1, a2, a3, a4, a6 = C.ainvs
        if (a4 // p**4) % p != 0:
            return LocalData(p, ReductionType.ADDITIVE, KODAIRA_III_STAR, 2, vD - 7, vD, C)
        if (a6 // p**6) % p != 0:
            return LocalData(p, ReductionType.ADDITIVE, KODAIRA_II_STAR, 1, vD - 8, vD, C)

        logger.debug(f"model not minimal at {p}; rescaling {C}")
        C = C.scale_down(p)


@lru_cache(maxsize=1024)
def minimal_model(E: WeierstrassCurve) -> WeierstrassCurve:
    """
    The reduced global minimal model of E.

    For every p with v_p(Delta) >= 12 Tate's algorithm gives the minimal valuation;
    u is the product of p^((v - v_min) / 12) and the model is rebuilt from
    (c4 / u^4, c6 / u^6).
    """
    u = 1
    for p in E.bad_primes:
        v = _val(E.discriminant, p)
        if v < 12:
            continue
        vmin = tate_algorithm(E, p).discriminant_valuation
        u *= p ** ((v - vmin) // 12)
    return from_c4_c6(E.c4 // u**4, E.c6 // u**6)


def _local_data(E: WeierstrassCurve) -> Tuple[LocalData, ...]:
    Emin = minimal_model(E)
    return tuple(tate_algorithm(Emin, p) for p in Emin.bad_primes)


def conductor(E: WeierstrassCurve) -> int:
    """Product of p^f_p over the primes of bad reduction."""
    n = 1
    for data in _local_data(E):
        n *= data.prime**data.conductor_exponent
    return n


def tamagawa_numbers(E: WeierstrassCurve) -> Dict[int, int]:
    """c_p at every prime dividing the minimal discriminant."""
    return {data.prime: data.tamagawa for data in _local_data(E)}


def tamagawa_product(E: WeierstrassCurve, exclude: Iterable[int] = ()) -> int:
    """Product of the Tamagawa numbers, skipping the primes in ``exclude``."""
    skip = set(exclude)
    out = 1
    for p, c in tamagawa_numbers(E).items():
        if p not in skip:
            out *= c
    return out
