"""Lower density of twists with H10-gen for semistable curves with a rational 3-isogeny."""

import logging
from fractions import Fraction
from typing import List

from sympy import factorint

from ..exceptions import HypothesisError, InputValidationError, NonSemistableError
from ..ingest import CurveRecord
from ..padic import require_odd_prime
from .checks import (
    good_ordinary,
    non_anomalous,
    regulator_unit,
    selmer_corank_is,
    sha_prime_to_p,
    tamagawa_prime_to_p,
)
from .models import HypothesisStatus

logger = logging.getLogger(__name__)

__all__ = ["isogeny3_density", "isogeny3_preconditions"]


def isogeny3_density(N: int, has3isogeny: bool = True) -> Fraction:
    """
    1/(3 * 2^r) * 1/2^(k - delta) * prod_{l | N, l != 3} q_l / (l + 1)

    with r = 0 for odd N and 2 for even N, delta = 0 if 3 | N else 1, k = omega(N),
    q_l = l for odd l and q_2 = 4.

    Raises:
        InputValidationError: If N < 1
        NonSemistableError: If N is not squarefree
        HypothesisError: If the curve has no rational 3-isogeny
    """
    if N < 1:
        raise InputValidationError(f"conductor must be positive, got {N}", details={"N": N})
    if not has3isogeny:
        raise HypothesisError("the density needs a rational 3-isogeny", details={"N": N})
    factors = factorint(N)
    if any(e > 1 for e in factors.values()):
        raise NonSemistableError(
            f"conductor {N} is not squarefree", details={"N": N, "factorization": factors}
        )
    r = 2 if N % 2 == 0 else 0
    delta = 0 if N % 3 == 0 else 1
    k = len(factors)
    density = Fraction(1, 3 * 2**r) / Fraction(2) ** (k - delta)
    for ell in factors:
        if ell == 3:
            continue
        q = 4 if ell == 2 else ell
        density *= Fraction(q, ell + 1)
    return density


def isogeny3_preconditions(record: CurveRecord, p: int) -> List[HypothesisStatus]:
    """Semistability, the 3-isogeny, rank 1, p > 3, and the H10-gen hypotheses on E."""
    require_odd_prime(p)
    E = record.curve
    worst = max(factorint(record.conductor).values(), default=1)
    rank = record.rank
    return [
        HypothesisStatus.computed("E semistable", worst == 1, f"N = {record.conductor}"),
        HypothesisStatus.ingested(
            "rational 3-isogeny",
            True if record.isogeny is not None else None,
            "" if record.isogeny is None else f"kernel x = {record.isogeny.kernel_x}",
        ),
        HypothesisStatus.ingested(
            "rank 1", None if rank is None else rank == 1, "" if rank is None else f"rank = {rank}"
        ),
        HypothesisStatus.computed(f"p = {p} > 3", p > 3, f"p = {p}"),
        selmer_corank_is(record, p, 1),
        good_ordinary(E, p),
        non_anomalous(E, p),
        tamagawa_prime_to_p(E, p),
        regulator_unit(record, p),
        sha_prime_to_p(record, p),
    ]
