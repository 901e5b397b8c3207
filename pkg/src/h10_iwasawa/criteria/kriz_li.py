"""
The Kriz-Li set S of auxiliary primes and its density.

For E of conductor N with E(Q)[2] = 0, an imaginary quadratic K0 and an odd prime p,
a prime l coprime to 2N lies in S when
    1. l splits in K0,
    2. l is a square modulo every prime dividing N,
    3. l = 1 mod 4,
    4. Frob_l has order 3 in Gal(Q(E[2])/Q).
Twists of E by d_K0 times a product of S-primes inherit H10-gen from E^(d_K0).

Example:
    >>> s_primes(record_37a1, make_field(-7), 11, bound=700)
    [53, 149, 337, 373, 613]
"""

import logging
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from sympy import factorint, primerange

from ..constants import GAUSSIAN_DISCRIMINANT, KRIZ_LI_TABLE, MOD2_IMAGES
from ..curves import has_rational_two_torsion, mod2_image, two_division_frobenius_order
from ..exceptions import InputValidationError, UnsupportedGaloisImageError
from ..ingest import CurveRecord, normalize_label
from ..padic import is_square_mod, require_odd_prime
from ..quad import ImagQuadField, Splitting, make_field, splitting
from .checks import (
    good_ordinary,
    non_anomalous,
    regulator_unit,
    selmer_corank_is,
    tamagawa_prime_to_p,
)
from .models import HypothesisStatus

logger = logging.getLogger(__name__)

__all__ = [
    "KrizLiConditions",
    "kriz_li_conditions",
    "kriz_li_S_test",
    "s_primes",
    "kriz_li_preconditions",
    "kriz_li_density",
    "kriz_li_density_formula",
    "kriz_li_twist_family",
    "kriz_li_catalogue",
    "is_catalogued",
]


@dataclass(frozen=True)
class KrizLiConditions:
    """The four membership conditions for one prime l, evaluated independently."""

    ell: int
    splits: bool
    squares: bool
    one_mod_4: bool
    frobenius_order_3: bool

    @property
    def member(self) -> bool:
        return self.splits and self.squares and self.one_mod_4 and self.frobenius_order_3

    def to_dict(self) -> Dict[str, object]:
        return {**asdict(self), "member": self.member}


def _square_moduli(record: CurveRecord, p: int, include_p: bool) -> Tuple[int, ...]:
    primes = set(factorint(record.conductor))
    if include_p:
        primes.add(p)
    return tuple(sorted(primes))


def _check_ell(ell: int, record: CurveRecord) -> None:
    if (2 * record.conductor) % ell == 0:
        raise InputValidationError(
            f"{ell} divides 2 * cond(E) = {2 * record.conductor}",
            details={"ell": ell, "conductor": record.conductor},
        )


def kriz_li_conditions(
    ell: int, record: CurveRecord, K0: ImagQuadField, p: int, include_p: bool = False
) -> KrizLiConditions:
    """
    Evaluate every condition for l without short-circuiting.

    With ``include_p`` the square condition also runs modulo p.

    Raises:
        InputValidationError: If l divides 2N
    """
    _check_ell(ell, record)
    return KrizLiConditions(
        ell=ell,
        splits=splitting(K0, ell) is Splitting.SPLIT,
        squares=all(is_square_mod(ell, q) for q in _square_moduli(record, p, include_p)),
        one_mod_4=ell % 4 == 1,
        frobenius_order_3=two_division_frobenius_order(record.curve, ell) == 3,
    )


def kriz_li_S_test(
    ell: int, record: CurveRecord, K0: ImagQuadField, p: int, include_p: bool = False
) -> bool:
    """
    True iff l lies in S. Cheap congruence conditions run before the Frobenius test.

    Raises:
        InputValidationError: If l divides 2N
    """
    _check_ell(ell, record)
    if ell % 4 != 1:
        return False
    if splitting(K0, ell) is not Splitting.SPLIT:
        return False
    if not all(is_square_mod(ell, q) for q in _square_moduli(record, p, include_p)):
        return False
    return two_division_frobenius_order(record.curve, ell) == 3


def s_primes(
    record: CurveRecord, K0: ImagQuadField, p: int, bound: int, include_p: bool = False
) -> List[int]:
    """Members of S below ``bound`` (exclusive), ascending."""
    require_odd_prime(p)
    out = [
        ell
        for ell in primerange(3, bound)
        if (2 * record.conductor) % ell != 0 and kriz_li_S_test(ell, record, K0, p, include_p)
    ]
    logger.debug(f"S for {record.label}, {K0}, p = {p}, below {bound}: {out}")
    return out


def kriz_li_preconditions(
    record: CurveRecord, K0: ImagQuadField, p: int
) -> List[HypothesisStatus]:
    """Hypotheses on (E, K0, p) under which S transfers H10-gen to twists."""
    require_odd_prime(p)
    E = record.curve
    two_torsion = has_rational_two_torsion(E)
    bad_splits = [
        q for q in sorted(set(factorint(p * record.conductor)))
        if splitting(K0, q) is not Splitting.SPLIT
    ]
    heegner = record.heegner_flag
    return [
        HypothesisStatus.computed(
            "E(Q)[2] = 0", not two_torsion, f"2-division cubic has a rational root: {two_torsion}"
        ),
        selmer_corank_is(record, p, 1),
        good_ordinary(E, p),
        non_anomalous(E, p),
        tamagawa_prime_to_p(E, p),
        regulator_unit(record, p),
        HypothesisStatus.computed(
            f"2 splits in {K0}", splitting(K0, 2) is Splitting.SPLIT,
            f"({K0.disc}/2) = {splitting(K0, 2).value}",
        ),
        HypothesisStatus.computed(
            f"primes dividing pN split in {K0}",
            not bad_splits,
            f"not split: {bad_splits}" if bad_splits else f"pN = {p * record.conductor}",
        ),
        HypothesisStatus.ingested(
            "Heegner point condition", heegner, "" if heegner is None else f"attested {heegner}"
        ),
    ]


def kriz_li_density_formula(image: str, k: int, gaussian: bool = False) -> Fraction:
    """
    Natural density of S from the mod-2 image and k = omega(N).

    Z/3: 2/3 * 2^-(k+2), or 2/3 * 2^-(k+1) when K0 = Q(i). S3: 1/3 * 2^-(k+1).

    Raises:
        UnsupportedGaloisImageError: For the images Z/2 and trivial
        InputValidationError: If k is negative or ``image`` is not a subgroup of S3
    """
    if image not in MOD2_IMAGES:
        raise InputValidationError(
            f"unknown mod-2 image {image!r}",
            details={"image": image, "valid": list(MOD2_IMAGES)},
        )
    if k < 0:
        raise InputValidationError(f"k must be >= 0, got {k}", details={"k": k})
    if image == "Z/3":
        return Fraction(2, 3) / 2 ** (k + 1 if gaussian else k + 2)
    if image == "S3":
        return Fraction(1, 3) / 2 ** (k + 1)
    raise UnsupportedGaloisImageError(
        f"no density formula when Gal(Q(E[2])/Q) is {image}",
        details={"image": image, "supported": ["Z/3", "S3"]},
    )


def kriz_li_density(record: CurveRecord, K0: ImagQuadField) -> Fraction:
    """
    Density of S for a curve; the image is computed from the 2-division cubic.

    Raises:
        UnsupportedGaloisImageError: If Q(E[2])/Q has group Z/2 or is trivial
    """
    image = mod2_image(record.curve)
    if record.mod2_image is not None and record.mod2_image != image:
        logger.warning(
            f"{record.label}: attested mod-2 image {record.mod2_image}, computed {image}; "
            f"using the computed one"
        )
    k = len(factorint(record.conductor))
    return kriz_li_density_formula(image, k, gaussian=K0.disc == GAUSSIAN_DISCRIMINANT)


def kriz_li_catalogue(label: str) -> List[Tuple[ImagQuadField, int]]:
    """Published (K0, p) choices for a curve label; empty when the curve is not listed."""
    key = normalize_label(label)
    return [(make_field(d), p) for name, d, p in KRIZ_LI_TABLE if name == key]


def is_catalogued(record: CurveRecord, K0: ImagQuadField, p: int) -> bool:
    """True when (curve, K0, p) is one of the published Kriz-Li triples."""
    return any(
        (field.disc, q) == (K0.disc, p)
        for label in sorted(record.keys)
        for field, q in kriz_li_catalogue(label)
    )


def kriz_li_twist_family(
    record: CurveRecord,
    K0: ImagQuadField,
    p: int,
    bound: int,
    include_p: bool = False,
) -> List[Tuple[int, int]]:
    """
    Pairs (m, m * d) with m a product of one or more distinct S-primes and |m * d| < bound,
    where K0 = Q(sqrt(d)); sorted by |m * d|.
    """
    base = abs(K0.d)
    primes = s_primes(record, K0, p, bound // base + 1, include_p)
    family: List[int] = []

    def extend(start: int, m: int) -> None:
        for i in range(start, len(primes)):
            nxt = m * primes[i]
            if nxt * base >= bound:
                break
            family.append(nxt)
            extend(i + 1, nxt)

    extend(0, 1)
    return sorted(((m, m * K0.d) for m in family), key=lambda pair: pair[0])
