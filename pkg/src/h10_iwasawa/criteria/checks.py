"""Single-hypothesis checks shared by the criteria, each returning a ``HypothesisStatus``.

Computed checks always carry their numbers as evidence. Ingested checks read attested
record fields; an absent field yields ``unknown``.
"""

from typing import List, Optional

from ..curves import (
    TorsionStatus,
    WeierstrassCurve,
    count_points,
    tamagawa_product,
    torsion_p_trivial,
)
from ..exceptions import BadReductionError
from ..ingest import CurveRecord
from .models import HypothesisStatus

__all__ = [
    "good_ordinary",
    "non_anomalous",
    "tamagawa_prime_to_p",
    "torsion_trivial",
    "selmer_corank_is",
    "regulator_unit",
    "sha_prime_to_p",
    "all_passed",
]


def good_ordinary(E: WeierstrassCurve, p: int, tag: str = "E") -> HypothesisStatus:
    name = f"good ordinary at {p} ({tag})"
    try:
        a_p = count_points(E, p).trace
    except BadReductionError:
        return HypothesisStatus.computed(name, False, f"bad reduction at {p}")
    return HypothesisStatus.computed(name, a_p % p != 0, f"a_{p} = {a_p}")


def non_anomalous(E: WeierstrassCurve, p: int, tag: str = "E") -> HypothesisStatus:
    name = f"E~(F_{p})[{p}] = 0 ({tag})"
    try:
        n = count_points(E, p).count
    except BadReductionError:
        return HypothesisStatus.computed(name, False, f"bad reduction at {p}")
    return HypothesisStatus.computed(name, n % p != 0, f"#E~(F_{p}) = {n}")


def tamagawa_prime_to_p(E: WeierstrassCurve, p: int, tag: str = "E") -> HypothesisStatus:
    c = tamagawa_product(E)
    return HypothesisStatus.computed(
        f"{p} does not divide prod c_l ({tag})", c % p != 0, f"prod c_l = {c}"
    )


def torsion_trivial(E: WeierstrassCurve, p: int, tag: str = "E") -> HypothesisStatus:
    name = f"E(Q)[{p}] = 0 ({tag})"
    if torsion_p_trivial(E, p) is TorsionStatus.CERTIFIED_TRIVIAL:
        return HypothesisStatus.computed(name, True, "certified by a good reduction")
    return HypothesisStatus.unknown(name, "no certifying prime found")


def selmer_corank_is(
    record: Optional[CurveRecord], p: int, expected: int, tag: str = "E"
) -> HypothesisStatus:
    name = f"corank Sel_{p}^infty = {expected} ({tag})"
    if record is None:
        return HypothesisStatus.unknown(name, f"no record for {tag}")
    value = record.selmer_corank.get(p)
    if value is None:
        return HypothesisStatus.ingested(name, None)
    return HypothesisStatus.ingested(name, value == expected, f"corank = {value}")


def regulator_unit(
    record: Optional[CurveRecord], p: int, tag: str = "E", twist: bool = False
) -> HypothesisStatus:
    """
    Attested unit flag for the normalized p-adic regulator.

    With ``twist`` the row belongs to a quadratic twist; the evidence then records that
    the flag is required of the twist as well as of E, a stricter test than one on E alone.
    """
    name = f"normalized {p}-adic regulator is a unit ({tag})"
    note = f"; required for {tag} as well as E (stricter than E alone)" if twist else ""
    if record is None:
        return HypothesisStatus.unknown(name, f"no record for {tag}{note}")
    flag = record.regulator_unit.get(p)
    evidence = "not attested" if flag is None else f"attested {flag}"
    return HypothesisStatus.ingested(name, flag, f"{evidence}{note}")


def sha_prime_to_p(record: Optional[CurveRecord], p: int, tag: str = "E") -> HypothesisStatus:
    name = f"{p} does not divide #Sha ({tag})"
    if record is None:
        return HypothesisStatus.unknown(name, f"no record for {tag}")
    if record.sha_order is None:
        return HypothesisStatus.ingested(name, None)
    return HypothesisStatus.ingested(
        name, record.sha_order % p != 0, f"#Sha = {record.sha_order}"
    )


def all_passed(rows: List[HypothesisStatus]) -> bool:
    return bool(rows) and all(r.passed for r in rows)
