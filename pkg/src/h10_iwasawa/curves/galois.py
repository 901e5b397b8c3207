"""Frobenius in Gal(Q(E[2])/Q) and the mod-2 image, from the 2-division cubic."""

import logging
from typing import List

from sympy import Poly, QQ, symbols
from sympy.ntheory.primetest import is_square

from ..exceptions import CurveError, RamifiedPrimeError
from ..padic import is_square_mod
from .tate import minimal_model
from .weierstrass import WeierstrassCurve

logger = logging.getLogger(__name__)

__all__ = ["two_division_frobenius_order", "mod2_image", "has_rational_two_torsion"]

_x = symbols("x")


def _cubic(E: WeierstrassCurve) -> object:
    c3, c2, c1, c0 = E.two_division_cubic()
    return c3 * _x**3 + c2 * _x**2 + c1 * _x + c0


def _factor_degrees_mod(E: WeierstrassCurve, ell: int) -> List[int]:
    _, factors = Poly(_cubic(E), _x, modulus=ell).factor_list()
    degrees: List[int] = []
    for f, mult in factors:
        degrees.extend([f.degree()] * mult)
    return sorted(degrees)


def two_division_frobenius_order(E: WeierstrassCurve, ell: int) -> int:
    """
    Order of Frob_ell in Gal(Q(E[2])/Q), a subgroup of S3, so 1, 2 or 3.

    Read from the factorization of 4x^3 + b2 x^2 + 2 b4 x + b6 mod ell: three linear
    factors give 1, linear times quadratic gives 2, irreducible gives 3. Orders 1 and 3
    are exactly the cases with Delta a square mod ell.

    Raises:
        RamifiedPrimeError: If ell divides 2 * Delta_min
    """
    Emin = minimal_model(E)
    if ell == 2 or Emin.discriminant % ell == 0:
        raise RamifiedPrimeError(
            f"{ell} may ramify in Q(E[2])",
            details={"ell": ell, "discriminant": Emin.discriminant},
        )
    degrees = _factor_degrees_mod(Emin, ell)
    order = {(1, 1, 1): 1, (1, 2): 2, (3,): 3}.get(tuple(degrees))
    if order is None:
        raise CurveError(
            "unexpected factorization of the 2-division cubic",
            details={"ell": ell, "degrees": degrees},
        )
    if is_square_mod(Emin.discriminant, ell) != (order != 2):
        raise CurveError(
            "Frobenius order disagrees with the square class of the discriminant",
            details={"ell": ell, "order": order},
        )
    return order


def has_rational_two_torsion(E: WeierstrassCurve) -> bool:
    _, factors = Poly(_cubic(E), _x, domain=QQ).factor_list()
    return any(f.degree() == 1 for f, _ in factors)


def mod2_image(E: WeierstrassCurve) -> str:
    """Gal(Q(E[2])/Q) as one of "trivial", "Z/2", "Z/3", "S3"."""
    _, factors = Poly(_cubic(E), _x, domain=QQ).factor_list()
    degrees = sorted(d for f, mult in factors for d in [f.degree()] * mult)
    if degrees == [3]:
        disc = E.discriminant
        return "Z/3" if disc > 0 and is_square(disc) else "S3"
    if degrees == [1, 2]:
        return "Z/2"
    return "trivial"
