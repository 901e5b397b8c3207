"""
H10-gen hypothesis checking for an elliptic curve E, an odd prime p and K = Q(sqrt(d)).

The Selmer module over K_cyc splits into the parts for E and E^(d), so every hypothesis
is checked on both curves: corank 1 for E and 0 for E^(d) (attested), good ordinary
reduction and E~(F_p)[p] = 0 (computed), p prime to the Tamagawa products (computed),
regulator and Sha prime to p (attested). When all pass, every Z_p-extension K_{a,b}
off one excluded line mod p has integrally diophantine layers over Q.
"""

import logging
from typing import List, Optional

from ..curves import minimal_model, quadratic_twist
from ..exceptions import HypothesisError, InputValidationError
from ..ingest import CurveRecord
from ..padic import require_odd_prime
from ..quad import make_field
from ..series import BivariateSeries, excluded_line
from .checks import (
    good_ordinary,
    non_anomalous,
    regulator_unit,
    selmer_corank_is,
    sha_prime_to_p,
    tamagawa_prime_to_p,
)
from .euler import euler_char_check
from .models import EXCLUDED_LINE_UNIDENTIFIED, HypothesisStatus, Verdict

logger = logging.getLogger(__name__)

__all__ = ["h10_check"]


def _check_twist_record(record: CurveRecord, twist: CurveRecord, d: int) -> None:
    expected = minimal_model(quadratic_twist(record.curve, d))
    if minimal_model(twist.curve) != expected:
        raise HypothesisError(
            f"{twist.label} is not the twist of {record.label} by {d}",
            details={
                "curve": record.label,
                "twist": twist.label,
                "d": d,
                "expected_ainvs": list(expected.ainvs),
            },
        )


def _lambda_cyc_K(record: CurveRecord, twist: Optional[CurveRecord], p: int) -> Optional[int]:
    if twist is None:
        return None
    parts = [euler_char_check(r, p) for r in (record, twist)]
    if any(part.status != "unit" or part.lambda_ is None for part in parts):
        return None
    return sum(part.lambda_ for part in parts)  # type: ignore[misc]


def h10_check(
    record: CurveRecord,
    p: int,
    d: int,
    twist_record: Optional[CurveRecord] = None,
    series: Optional[BivariateSeries] = None,
) -> Verdict:
    """
    Check the H10-gen hypotheses for (E, p, Q(sqrt(d))).

    Args:
        record: Attested record of E
        p: Odd prime
        d: Negative squarefree integer
        twist_record: Attested record of E^(d); without it the attested twist
            hypotheses are unknown
        series: Bivariate characteristic series over K_infty, used only to name the
            excluded line of a satisfied verdict

    Raises:
        InputValidationError: If p is not an odd prime, d is not negative squarefree,
            or the series is over another prime
        HypothesisError: If twist_record is not a model of E^(d)
    """
    require_odd_prime(p)
    if make_field(d).d != d:
        raise InputValidationError(f"d must be squarefree, got {d}", details={"d": d})
    if series is not None and series.prime != p:
        raise InputValidationError(
            f"series is over {series.prime}, not {p}", details={"p": p, "series_p": series.prime}
        )

    E = record.curve
    Ed = quadratic_twist(E, d)
    if twist_record is not None:
        _check_twist_record(record, twist_record, d)

    twist_tag = f"E^({d})"
    hypotheses: List[HypothesisStatus] = [
        selmer_corank_is(record, p, 1),
        selmer_corank_is(twist_record, p, 0, twist_tag),
        good_ordinary(E, p),
        good_ordinary(Ed, p, twist_tag),
        non_anomalous(E, p),
        non_anomalous(Ed, p, twist_tag),
        tamagawa_prime_to_p(E, p),
        tamagawa_prime_to_p(Ed, p, twist_tag),
        regulator_unit(record, p),
        regulator_unit(twist_record, p, twist_tag, twist=True),
        sha_prime_to_p(record, p),
        sha_prime_to_p(twist_record, p, twist_tag),
    ]

    satisfied = all(h.passed for h in hypotheses)
    line: Optional[str] = None
    note = ""
    if satisfied:
        if series is not None:
            line = str(excluded_line(series))
        else:
            note = EXCLUDED_LINE_UNIDENTIFIED

    verdict = Verdict(
        curve=record.label,
        p=p,
        d=d,
        hypotheses=hypotheses,
        h10gen="satisfied" if satisfied else "not-established",
        excluded_line=line,
        excluded_line_note=note,
        lambda_cyc_K=_lambda_cyc_K(record, twist_record, p),
    )
    logger.info(f"H10-gen for {record.label}, p = {p}, d = {d}: {verdict.h10gen}")
    return verdict
