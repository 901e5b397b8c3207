"""
Local Selmer ratios of a 3-isogeny on quadratic twists, and the t-invariant.

For phi: E -> E' of degree 3 and a twist d, c(phi_d) is the product over places v of
c_v(phi_d):
    v = inf        1/3 if E^(d)[phi](R) = Z/3, else 1
    v = l != 3     c_l(E'^(d)) / c_l(E^(d))
    v = 3          1 or 3; resolved by an attested value or by parity
t(phi_d) = ord_3 c(phi_d) has the parity of dim Sel_3(E^(d)/Q), and d lies in T_m(phi)
when |t(phi_d)| = m. T_0'(phi) collects the d in T_0(phi) with d < 0 and d = 1 mod 3.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence

from sympy import factorint

from ..curves import (
    KernelRealPoints,
    WeierstrassCurve,
    conductor,
    count_points,
    kernel_real_points,
    minimal_model,
    quadratic_twist,
    tamagawa_numbers,
)
from ..exceptions import (
    BadReductionError,
    InputValidationError,
    MissingIsogenyError,
    UnresolvedSelmerRatioError,
)
from ..ingest import CurveRecord
from ..padic import kronecker_symbol
from ..quad import fundamental_discriminant, squarefree_part
from .models import (
    INFINITY,
    AmbiguousSelmerRatio,
    LocalRatio,
    Place,
    RatioRow,
    SelmerRatio,
    SelmerRatioReport,
    TInvariant,
    ord3,
)

logger = logging.getLogger(__name__)

__all__ = [
    "IsogenyTwist",
    "selmer_ratio_local",
    "local_ratios",
    "global_candidates",
    "t_invariant",
    "t0prime_membership",
    "twist_selmer_report",
    "THREE_PLACE_CANDIDATES",
]

THREE_PLACE_CANDIDATES = (Fraction(1), Fraction(3))


@dataclass(frozen=True)
class IsogenyTwist:
    """A 3-isogeny E -> E' (kernel x-coordinate on E's model) and a twist parameter d."""

    domain: WeierstrassCurve
    codomain: WeierstrassCurve
    kernel_x: Fraction
    d: int

    def __post_init__(self) -> None:
        if self.d == 0 or squarefree_part(self.d) != self.d:
            raise InputValidationError(
                f"twist parameter must be squarefree, got {self.d}", details={"d": self.d}
            )

    @classmethod
    def from_record(cls, record: CurveRecord, d: int) -> "IsogenyTwist":
        """
        Raises:
            MissingIsogenyError: If the record attests no 3-isogeny with codomain
        """
        iso = record.isogeny
        if iso is None or iso.codomain_ainvs is None:
            raise MissingIsogenyError(
                f"{record.label} has no attested 3-isogeny with codomain",
                details={"label": record.label},
            )
        return cls(
            domain=record.curve,
            codomain=iso.codomain,  # type: ignore[arg-type]
            kernel_x=iso.kernel_x_value,
            d=d,
        )

    def _twist(self, E: WeierstrassCurve) -> WeierstrassCurve:
        return E if self.d == 1 else quadratic_twist(E, self.d)

    @property
    def twisted_domain(self) -> WeierstrassCurve:
        return self._twist(self.domain)

    @property
    def twisted_codomain(self) -> WeierstrassCurve:
        return self._twist(self.codomain)

    def places(self) -> List[Place]:
        """Primes dividing 6 N d in ascending order, then infinity."""
        primes = set(factorint(6 * conductor(self.domain) * abs(self.d)))
        return [*sorted(primes), INFINITY]


def selmer_ratio_local(
    phi: IsogenyTwist, place: Place, ingested: Optional[Fraction] = None
) -> LocalRatio:
    """
    c_v(phi_d) at one place.

    At 3 the value is 1 or 3: ``ingested`` selects it, otherwise both candidates are
    returned as an ``AmbiguousSelmerRatio``.

    Raises:
        InputValidationError: If an ingested 3-place value is not 1 or 3, or the place
            is not a prime or infinity
    """
    if place == INFINITY:
        real = kernel_real_points(phi.domain, phi.kernel_x, phi.d)
        value = Fraction(1, 3) if real is KernelRealPoints.Z3 else Fraction(1)
        return SelmerRatio(INFINITY, value)
    if not isinstance(place, int) or place < 2:
        raise InputValidationError(f"not a place: {place!r}", details={"place": place})
    if place == 3:
        if ingested is None:
            return AmbiguousSelmerRatio(3, THREE_PLACE_CANDIDATES)
        if ingested not in THREE_PLACE_CANDIDATES:
            raise InputValidationError(
                f"c_3(phi_d) must be 1 or 3, got {ingested}", details={"value": str(ingested)}
            )
        return SelmerRatio(3, Fraction(ingested))
    top = tamagawa_numbers(phi.twisted_codomain).get(place, 1)
    bottom = tamagawa_numbers(phi.twisted_domain).get(place, 1)
    return SelmerRatio(place, Fraction(top, bottom))


def local_ratios(
    phi: IsogenyTwist, ingested_three: Optional[Fraction] = None
) -> List[LocalRatio]:
    """Ratios at every place dividing 6 N d infinity; all other places contribute 1."""
    return [
        selmer_ratio_local(phi, v, ingested_three if v == 3 else None) for v in phi.places()
    ]


def _product(values: Iterable[Fraction]) -> Fraction:
    out = Fraction(1)
    for v in values:
        out *= v
    return out


def global_candidates(ratios: Iterable[LocalRatio]) -> List[Fraction]:
    """Every value c(phi_d) consistent with the local ratios, ascending."""
    fixed = Fraction(1)
    open_choices: List[Sequence[Fraction]] = []
    for ratio in ratios:
        if isinstance(ratio, AmbiguousSelmerRatio):
            open_choices.append(ratio.candidates)
        else:
            fixed *= ratio.value
    return sorted({fixed * _product(choice) for choice in itertools.product(*open_choices)})


def t_invariant(ratios: Iterable[LocalRatio], parity: Optional[int] = None) -> TInvariant:
    """
    t = sum of ord_3 over the local ratios.

    Ambiguous places are resolved by requiring t = parity mod 2; the result must then
    be unique.

    Raises:
        UnresolvedSelmerRatioError: If ambiguity remains (no parity, or several candidates
            of the right parity)
    """
    candidates = global_candidates(ratios)
    if len(candidates) == 1:
        value = candidates[0]
        return TInvariant(ord3(value), value, tuple(candidates), parity_used=False)

    shown = [str(c) for c in candidates]
    if parity is None:
        raise UnresolvedSelmerRatioError(
            "global Selmer ratio is ambiguous and no Selmer parity is available",
            details={"candidates": shown},
        )
    matching = [c for c in candidates if ord3(c) % 2 == parity % 2]
    if len(matching) != 1:
        raise UnresolvedSelmerRatioError(
            f"parity {parity} leaves {len(matching)} candidates",
            details={"candidates": shown, "parity": parity},
        )
    value = matching[0]
    logger.debug(f"parity {parity} selects c = {value} from {shown}")
    return TInvariant(ord3(value), value, tuple(candidates), parity_used=True)


def t0prime_membership(d: int, phi: IsogenyTwist, parity: Optional[int] = None) -> bool:
    """
    True iff d < 0, d = 1 mod 3 and t(phi_d) = 0.

    Raises:
        UnresolvedSelmerRatioError: If t(phi_d) is needed and cannot be resolved
        InputValidationError: If phi is twisted by a different d
    """
    if phi.d != d:
        raise InputValidationError(
            f"isogeny is twisted by {phi.d}, not {d}", details={"d": d, "phi_d": phi.d}
        )
    if d >= 0 or d % 3 != 1:
        return False
    return t_invariant(local_ratios(phi), parity).t == 0


def twist_selmer_report(
    record: CurveRecord, d: int, parity: Optional[int] = None
) -> SelmerRatioReport:
    """
    Run the p = 3 chain for the attested 3-isogeny of ``record`` and the twist d.

    ``parity`` is dim Sel_3(E^(d)/Q) (mod 2 is enough); without it an ambiguous 3-place
    leaves t unresolved and the report says so in ``note``.

    Raises:
        MissingIsogenyError: If the record attests no 3-isogeny with codomain
    """
    phi = IsogenyTwist.from_record(record, d)
    E = record.curve
    try:
        a3: Optional[int] = count_points(E, 3).trace
    except BadReductionError:
        a3 = None

    ratios = local_ratios(phi)
    report = SelmerRatioReport(
        curve=record.label,
        d=d,
        minimal_model=list(minimal_model(E).ainvs),
        conductor=conductor(E),
        a3=a3,
        good_ordinary_at_3=a3 is not None and a3 % 3 != 0,
        three_splits=d == 1 or kronecker_symbol(fundamental_discriminant(d), 3) == 1,
        ratios=[RatioRow(**r.to_dict()) for r in ratios],
        global_candidates=[str(c) for c in global_candidates(ratios)],
        parity=parity,
    )
    try:
        t = t_invariant(ratios, parity)
    except UnresolvedSelmerRatioError as e:
        logger.info(f"t(phi_{d}) unresolved for {record.label}: {e.message}")
        return report.model_copy(update={"note": e.message})

    in_t0 = t.t == 0
    return report.model_copy(
        update={
            "global_ratio": str(t.global_ratio),
            "t": t.t,
            "parity_used": t.parity_used,
            "in_T0": in_t0,
            "in_T0prime": in_t0 and d < 0 and d % 3 == 1,
        }
    )
