"""
Truncated Euler characteristic criterion over the cyclotomic Z_p-extension of Q.

With E(Q)[p] = 0 and good ordinary reduction at p, chi_t is a p-adic unit exactly when
the normalized p-adic regulator, #Sha[p^infty], the Tamagawa product and #E~(F_p) are
all prime to p. A unit chi_t gives mu = 0 and lambda = corank Sel_{p^infty}(E/Q).
"""

import logging

from ..ingest import CurveRecord
from ..padic import require_odd_prime
from .checks import (
    good_ordinary,
    non_anomalous,
    regulator_unit,
    sha_prime_to_p,
    tamagawa_prime_to_p,
    torsion_trivial,
)
from .models import EulerCharacteristic

logger = logging.getLogger(__name__)

__all__ = ["euler_char_check"]


def euler_char_check(record: CurveRecord, p: int) -> EulerCharacteristic:
    """
    Evaluate each factor of chi_t(Gamma, E[p^infty]) for unit-ness.

    Status is "unit" iff all four factors pass, "non-unit" if a factor fails, and
    "unknown" if an attested factor is missing or a precondition does not hold.

    Raises:
        InputValidationError: If p is not an odd prime
    """
    require_odd_prime(p)
    E = record.curve
    preconditions = [torsion_trivial(E, p), good_ordinary(E, p)]
    factors = [
        regulator_unit(record, p),
        sha_prime_to_p(record, p),
        tamagawa_prime_to_p(E, p),
        non_anomalous(E, p),
    ]

    if not all(row.passed for row in preconditions):
        status = "unknown"
    elif any(row.failed for row in factors):
        status = "non-unit"
    elif all(row.passed for row in factors):
        status = "unit"
    else:
        status = "unknown"

    mu = lam = None
    if status == "unit":
        mu, lam = 0, record.selmer_corank.get(p)

    logger.debug(f"chi_t for {record.label} at {p}: {status}")
    return EulerCharacteristic(
        curve=record.label,
        p=p,
        status=status,
        preconditions=preconditions,
        factors=factors,
        mu=mu,
        lambda_=lam,
    )
