"""Report models for the criteria engines.

Every model serializes with stable field names (``model_dump(mode="json")``) so that
JSON output of the CLI is a superset of its table output.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Literal, Optional, Tuple, Union

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, model_validator

__all__ = [
    "StatusValue",
    "HypothesisStatus",
    "Verdict",
    "EulerCharacteristic",
    "INFINITY",
    "Place",
    "SelmerRatio",
    "AmbiguousSelmerRatio",
    "LocalRatio",
    "TInvariant",
    "ord3",
    "RatioRow",
    "SelmerRatioReport",
    "ScanRow",
    "ScanReport",
    "EXCLUDED_LINE_UNIDENTIFIED",
]

StatusValue = Literal[
    "computed-pass", "computed-fail", "ingested-pass", "ingested-fail", "unknown"
]

EXCLUDED_LINE_UNIDENTIFIED = (
    "a unique excluded line exists but is not identified without bivariate series data"
)


class HypothesisStatus(BaseModel):
    """One checked hypothesis: where its truth value came from, and the numbers behind it."""

    model_config = ConfigDict(frozen=True)

    name: str = Field(description="Hypothesis name, e.g. 'good ordinary at p (E)'")
    status: StatusValue = Field(description="computed-/ingested- pass/fail, or unknown")
    evidence: str = Field(default="", description="Numeric evidence, e.g. 'a_17 = -4'")

    @model_validator(mode="after")
    def _computed_has_evidence(self) -> "HypothesisStatus":
        if self.status.startswith("computed") and not self.evidence:
            raise ValueError(f"computed status for {self.name!r} needs evidence")
        return self

    @classmethod
    def computed(cls, name: str, ok: bool, evidence: str) -> "HypothesisStatus":
        return cls(name=name, status="computed-pass" if ok else "computed-fail", evidence=evidence)

    @classmethod
    def ingested(
        cls, name: str, ok: Optional[bool], evidence: str = ""
    ) -> "HypothesisStatus":
        """``ok=None`` means the attested value is absent."""
        if ok is None:
            return cls(name=name, status="unknown", evidence=evidence or "not attested")
        return cls(name=name, status="ingested-pass" if ok else "ingested-fail", evidence=evidence)

    @classmethod
    def unknown(cls, name: str, evidence: str) -> "HypothesisStatus":
        return cls(name=name, status="unknown", evidence=evidence)

    @property
    def passed(self) -> bool:
        return self.status.endswith("-pass")

    @property
    def failed(self) -> bool:
        return self.status.endswith("-fail")


class Verdict(BaseModel):
    """Outcome of checking the H10-gen hypotheses for (E, p, d)."""

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {
                "curve": "58a1",
                "p": 17,
                "d": -1,
                "hypotheses": [
                    {"name": "good ordinary at p (E)", "status": "computed-pass",
                     "evidence": "a_17 = -4"}
                ],
                "h10gen": "satisfied",
                "excluded_line": None,
                "lambda_cyc_K": 1,
            }
        },
    )

    curve: str = Field(description="Label of E")
    p: int = Field(description="Odd prime p")
    d: int = Field(description="Negative squarefree d, K = Q(sqrt(d))")
    hypotheses: List[HypothesisStatus] = Field(description="Every checked hypothesis")
    h10gen: Literal["satisfied", "not-established"] = Field(
        description="satisfied only when every hypothesis passed"
    )
    excluded_line: Optional[str] = Field(
        default=None, description="Excluded class in P^1(F_p), e.g. '(1:3)', if identified"
    )
    excluded_line_note: str = Field(default="", description="Why the line is not given")
    lambda_cyc_K: Optional[int] = Field(
        default=None, description="lambda(E/Q_cyc) + lambda(E^(d)/Q_cyc) when both certified"
    )

    @model_validator(mode="after")
    def _fail_closed(self) -> "Verdict":
        all_pass = bool(self.hypotheses) and all(h.passed for h in self.hypotheses)
        if self.h10gen == "satisfied" and not all_pass:
            raise ValueError("a verdict with a non-passing hypothesis cannot be satisfied")
        if self.excluded_line is not None and self.h10gen != "satisfied":
            raise ValueError("the excluded line is only reported for satisfied verdicts")
        return self

    @property
    def satisfied(self) -> bool:
        return self.h10gen == "satisfied"

    @property
    def failed(self) -> List[HypothesisStatus]:
        return [h for h in self.hypotheses if h.failed]

    @property
    def unknown(self) -> List[HypothesisStatus]:
        return [h for h in self.hypotheses if h.status == "unknown"]


class EulerCharacteristic(BaseModel):
    """Whether the truncated Euler characteristic over Q_cyc is a p-adic unit."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    curve: str
    p: int
    status: Literal["unit", "non-unit", "unknown"]
    preconditions: List[HypothesisStatus] = Field(
        description="E(Q)[p] = 0 and good ordinary reduction at p"
    )
    factors: List[HypothesisStatus] = Field(
        description="Regulator, Sha, Tamagawa product, #E~(F_p): each a p-adic unit?"
    )
    mu: Optional[int] = Field(default=None, description="mu over Q_cyc when status is unit")
    lambda_: Optional[int] = Field(
        default=None, alias="lambda", description="lambda over Q_cyc when status is unit"
    )


# =============================================================================
# SELMER RATIOS
# =============================================================================

INFINITY = "inf"

Place = Union[int, str]


def ord3(value: Fraction) -> int:
    """3-adic valuation of a nonzero rational."""
    n, d, out = value.numerator, value.denominator, 0
    while n % 3 == 0:
        n //= 3
        out += 1
    while d % 3 == 0:
        d //= 3
        out -= 1
    return out


@dataclass(frozen=True)
class SelmerRatio:
    """A resolved local Selmer ratio c_v(phi_d)."""

    place: Place
    value: Fraction

    @property
    def ord3(self) -> int:
        return ord3(self.value)

    def to_dict(self) -> Dict[str, Any]:
        return {"place": str(self.place), "value": str(self.value), "ord3": self.ord3}


@dataclass(frozen=True)
class AmbiguousSelmerRatio:
    """A local ratio known only up to a finite set of candidates."""

    place: Place
    candidates: Tuple[Fraction, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "place": str(self.place),
            "value": None,
            "candidates": [str(c) for c in self.candidates],
        }


LocalRatio = Union[SelmerRatio, AmbiguousSelmerRatio]


@dataclass(frozen=True)
class TInvariant:
    """t(phi_d) = ord_3 of the global ratio, with the candidates it was chosen from."""

    t: int
    global_ratio: Fraction
    candidates: Tuple[Fraction, ...]
    parity_used: bool

    @property
    def m(self) -> int:
        """d lies in T_m(phi) for m = |t|."""
        return abs(self.t)


class RatioRow(BaseModel):
    place: str
    value: Optional[str] = None
    ord3: Optional[int] = None
    candidates: Optional[List[str]] = None


class SelmerRatioReport(BaseModel):
    """The p = 3 chain for a 3-isogeny phi on E and a twist d."""

    curve: str
    d: int
    minimal_model: List[int]
    conductor: int
    a3: Optional[int] = Field(default=None, description="a_3(E); None at bad reduction")
    good_ordinary_at_3: bool
    three_splits: bool = Field(description="3 splits in Q(sqrt(d))")
    ratios: List[RatioRow]
    global_candidates: List[str]
    global_ratio: Optional[str] = None
    t: Optional[int] = None
    parity: Optional[int] = Field(default=None, description="dim Sel_3(E^(d)) used for parity")
    parity_used: bool = False
    in_T0: Optional[bool] = None
    in_T0prime: Optional[bool] = None
    note: str = ""


# =============================================================================
# SCANS
# =============================================================================


class ScanRow(BaseModel):
    d: int
    status: Literal["satisfied", "not-established", "unknown", "error"]
    twist_label: Optional[str] = None
    lambda_cyc_K: Optional[int] = None
    failed: List[str] = Field(default_factory=list)
    unknown: List[str] = Field(default_factory=list)
    t: Optional[int] = None
    error: Optional[str] = None


class ScanReport(BaseModel):
    """Per-d verdict rows for one curve and prime, with summary fractions."""

    curve: str
    p: int
    isogeny_mode: bool = False
    rows: List[ScanRow] = Field(default_factory=list)

    @property
    def attempted(self) -> int:
        return len(self.rows)

    def _fraction(self, count: int) -> Optional[Fraction]:
        return Fraction(count, self.attempted) if self.rows else None

    @property
    def satisfied_fraction(self) -> Optional[Fraction]:
        return self._fraction(sum(r.status == "satisfied" for r in self.rows))

    @property
    def blocked_fraction(self) -> Optional[Fraction]:
        """Rows blocked only by missing attested data."""
        return self._fraction(sum(r.status == "unknown" for r in self.rows))

    @property
    def t0_lower_bound(self) -> Optional[Fraction]:
        """Half the observed proportion of scanned d with t(phi_d) = 0 (isogeny mode)."""
        if not self.isogeny_mode or not self.rows:
            return None
        return Fraction(sum(r.t == 0 for r in self.rows), 2 * self.attempted)

    def summary(self) -> Dict[str, Any]:
        def show(x: Optional[Fraction]) -> Optional[str]:
            return None if x is None else str(x)

        return {
            "attempted": self.attempted,
            "satisfied": sum(r.status == "satisfied" for r in self.rows),
            "satisfied_fraction": show(self.satisfied_fraction),
            "blocked_fraction": show(self.blocked_fraction),
            "t0_lower_bound": show(self.t0_lower_bound),
        }

    def to_dict(self) -> Dict[str, Any]:
        return {**self.model_dump(mode="json"), "summary": self.summary()}

    def to_dataframe(self) -> pd.DataFrame:
        """One row per d; list columns are joined with '; '."""
        columns = ["d", "status", "twist_label", "lambda_cyc_K", "failed", "unknown"]
        if self.isogeny_mode:
            columns.append("t")
        records = []
        for row in self.rows:
            data = row.model_dump()
            data["failed"] = "; ".join(row.failed)
            data["unknown"] = "; ".join(row.unknown)
            records.append({c: data[c] for c in columns})
        return pd.DataFrame.from_records(records, columns=columns)
