"""
Iwasawa invariants of specialized series and the excluded line.

For h in Z_p[[T]], mu is the minimal valuation of a coefficient and lambda the first
index attaining it (the degree of the distinguished polynomial in the Weierstrass
preparation of h / p^mu).
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from ..exceptions import CyclotomicHypothesisError, NotCotorsionError
from ..padic import ProjectiveLineFp
from .lines import specialize_line
from .power_series import BivariateSeries, UnivariateSeries

logger = logging.getLogger(__name__)

__all__ = [
    "IwasawaInvariants",
    "mu_lambda",
    "excluded_line",
    "line_invariants",
    "is_mu0_lambda1",
]


@dataclass(frozen=True, slots=True)
class IwasawaInvariants:
    """
    (mu, lambda) of a series, with a flag saying whether the truncation can be trusted.

    ``certified`` is False when the witnessing coefficient sits at the degree cap, where
    unseen higher terms could change the reading.
    """

    mu: int
    lambda_: int
    certified: bool
    precision: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mu": self.mu,
            "lambda": self.lambda_,
            "certified": self.certified,
            "precision": self.precision,
        }

    def __str__(self) -> str:
        flag = "" if self.certified else " (uncertified)"
        return f"mu={self.mu}, lambda={self.lambda_}{flag}"


def mu_lambda(h: UnivariateSeries) -> IwasawaInvariants:
    """
    Read (mu, lambda) off the coefficients of h.

    Raises:
        NotCotorsionError: If every coefficient is zero to the working precision
    """
    best: Optional[Tuple[int, int]] = None
    for i, c in enumerate(h.coefficients):
        if c.is_zero:
            continue
        v = c.valuation()
        assert isinstance(v, int)
        if best is None or v < best[0]:
            best = (v, i)
            if v == 0:
                break
    if best is None:
        raise NotCotorsionError(
            "series is zero at this precision; the Selmer group is not cotorsion",
            details={"prime": h.prime, "precision": h.precision, "cap": h.cap},
        )
    mu, lam = best
    certified = mu < h.precision and lam < h.cap
    return IwasawaInvariants(mu=mu, lambda_=lam, certified=certified, precision=h.precision)


def is_mu0_lambda1(inv: IwasawaInvariants) -> bool:
    return inv.mu == 0 and inv.lambda_ == 1


def excluded_line(F: BivariateSeries) -> ProjectiveLineFp:
    """
    The unique line of P^1(F_p) along which (mu, lambda) = (0, 1) fails.

    Along a line (1 : t) the specialization is a_00 + (a_01 - a_10 t) Y + O(Y^2); along
    (0 : 1) it is a_00 + a_10 X + O(X^2). With p | a_00 and a_01 a unit the linear term
    vanishes mod p on exactly one line, namely (a_10 : a_01).

    Raises:
        CyclotomicHypothesisError: If p does not divide a_00 or a_01 is not a unit
    """
    p = F.prime
    a00, a10, a01 = F.coefficient(0, 0), F.coefficient(1, 0), F.coefficient(0, 1)
    if a00.is_unit or not a01.is_unit:
        raise CyclotomicHypothesisError(
            "cyclotomic hypotheses not met: need p | a_00 and a_01 a unit",
            details={
                "prime": p,
                "a00_mod_p": a00.residue % p,
                "a01_mod_p": a01.residue % p,
            },
        )
    line = ProjectiveLineFp.from_pair(a10.residue % p, a01.residue % p, p)
    logger.debug(f"excluded line for p={p}: {line}")
    return line


def line_invariants(
    F: BivariateSeries,
) -> List[Tuple[ProjectiveLineFp, Optional[IwasawaInvariants]]]:
    """(mu, lambda) along every one of the p + 1 lines; None where the series vanishes."""
    table: List[Tuple[ProjectiveLineFp, Optional[IwasawaInvariants]]] = []
    for line in ProjectiveLineFp.all_lines(F.prime):
        a, b = line.representative()
        h = specialize_line(F, a, b)
        try:
            inv: Optional[IwasawaInvariants] = mu_lambda(h)
        except NotCotorsionError:
            logger.debug(f"line {line}: specialization vanishes")
            inv = None
        table.append((line, inv))
    return table
