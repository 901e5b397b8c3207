"""Pydantic models for attested curve records (schema 1).

A record carries the arithmetic facts this package ingests but never computes (rank,
Selmer coranks, regulator flags, Sha, Heegner flag) next to data it can recompute
(conductor, Tamagawa numbers), which is cross-checked against Tate's algorithm on load.

Examples:
    >>> record = parse_record(Path("58a1.json").read_text())
    >>> record.conductor, record.selmer_corank
    (58, {17: 1})
"""

import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, FrozenSet, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from ..constants import SCHEMA_VERSION
from ..curves import WeierstrassCurve, conductor, tamagawa_numbers
from ..exceptions import CurveError, RecordNotFoundError, RecordValidationError

logger = logging.getLogger(__name__)

__all__ = [
    "CurveRecord",
    "IsogenyData",
    "TwistOf",
    "normalize_label",
    "is_lmfdb_label",
    "parse_record",
    "record_from_payload",
    "load_record_file",
    "dump_record",
    "validate_record",
]

Mod2Image = Literal["trivial", "Z/2", "Z/3", "S3"]


def normalize_label(label: str) -> str:
    """Case-folded label. LMFDB labels keep their dot: ``11.a2`` and ``11a2`` are different curves."""
    return label.strip().lower()


def is_lmfdb_label(label: str) -> bool:
    """LMFDB labels contain a dot (``58.a1``), Cremona labels do not (``58a1``)."""
    return "." in label


class IsogenyData(BaseModel):
    """A rational 3-isogeny phi: E -> E' given by its kernel x-coordinate on E's model."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    degree: Literal[3] = Field(description="Isogeny degree (only 3 is supported)")
    kernel_x: str = Field(description='x-coordinate of a kernel point as a rational, e.g. "6"')
    codomain_ainvs: Optional[List[int]] = Field(
        default=None, description="a-invariants of the codomain E'"
    )

    @field_validator("kernel_x")
    @classmethod
    def _rational(cls, value: str) -> str:
        try:
            Fraction(value)
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"kernel_x must be a rational number, got {value!r}") from e
        return value

    @field_validator("codomain_ainvs")
    @classmethod
    def _five(cls, value: Optional[List[int]]) -> Optional[List[int]]:
        if value is not None and len(value) != 5:
            raise ValueError(f"codomain_ainvs needs 5 entries, got {len(value)}")
        return value

    @property
    def kernel_x_value(self) -> Fraction:
        return Fraction(self.kernel_x)

    @property
    def codomain(self) -> Optional[WeierstrassCurve]:
        if self.codomain_ainvs is None:
            return None
        return WeierstrassCurve.from_ainvs(self.codomain_ainvs)


class TwistOf(BaseModel):
    """Link from a twist record to the curve it twists."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    label: str = Field(description="Label of the base curve E")
    d: int = Field(description="Squarefree twist parameter, this curve is E^(d)")


class CurveRecord(BaseModel):
    """Attested data for one elliptic curve over Q.

    Absent attested data is represented by ``None`` (scalars) or an empty map; the
    criteria treat absence as "unknown", never as a pass.
    """

    model_config = ConfigDict(
        extra="forbid",
        frozen=True,
        populate_by_name=True,
        json_schema_extra={
            "example": {
                "schema": 1,
                "label": "58a1",
                "lmfdb_label": "58.a1",
                "ainvs": [1, -1, 0, -1, 1],
                "conductor": 58,
                "rank": 1,
                "selmer_corank": {"17": 1},
                "regulator_unit": {"17": True},
                "sha_order": 1,
                "torsion": [],
                "tamagawa": {"2": 2, "29": 1},
                "isogeny": None,
                "heegner_flag": None,
                "mod2_image": "S3",
            }
        },
    )

    schema_version: int = Field(
        default=SCHEMA_VERSION, alias="schema", description="Record schema version"
    )
    label: str = Field(description="Curve label (Cremona or LMFDB style)")
    lmfdb_label: Optional[str] = Field(
        default=None, description="LMFDB label when ``label`` is a Cremona label"
    )
    ainvs: List[int] = Field(description="Weierstrass coefficients [a1, a2, a3, a4, a6]")
    conductor: int = Field(description="Attested conductor, checked against Tate", gt=0)
    rank: Optional[int] = Field(default=None, description="Attested Mordell-Weil rank", ge=0)
    selmer_corank: Dict[int, int] = Field(
        default_factory=dict, description="p -> Z_p-corank of Sel_{p^infty}(E/Q)"
    )
    regulator_unit: Dict[int, bool] = Field(
        default_factory=dict, description="p -> normalized p-adic regulator is a p-adic unit"
    )
    sha_order: Optional[int] = Field(default=None, description="Attested #Sha(E/Q)", ge=1)
    torsion: List[int] = Field(
        default_factory=list, description="Invariant factors of E(Q)_tors, [] if trivial"
    )
    tamagawa: Optional[Dict[int, int]] = Field(
        default=None, description="l -> c_l, cross-check only"
    )
    isogeny: Optional[IsogenyData] = Field(default=None, description="Rational 3-isogeny")
    heegner_flag: Optional[bool] = Field(
        default=None, description="Heegner point condition of the Kriz-Li criterion"
    )
    mod2_image: Optional[Mod2Image] = Field(default=None, description="Gal(Q(E[2])/Q)")
    twist_of: Optional[TwistOf] = Field(default=None, description="Base curve if a twist")
    sel3_dim: Optional[int] = Field(
        default=None, description="Attested dim over F_3 of Sel_3(E/Q)", ge=0
    )

    @field_validator("schema_version")
    @classmethod
    def _known_schema(cls, value: int) -> int:
        if value != SCHEMA_VERSION:
            raise ValueError(f"unsupported record schema {value}, expected {SCHEMA_VERSION}")
        return value

    @field_validator("ainvs")
    @classmethod
    def _five(cls, value: List[int]) -> List[int]:
        if len(value) != 5:
            raise ValueError(f"ainvs needs 5 entries, got {len(value)}")
        return value

    @field_validator("selmer_corank", "regulator_unit", "tamagawa")
    @classmethod
    def _sorted_keys(cls, value: Optional[Dict[int, Any]]) -> Optional[Dict[int, Any]]:
        if value is None:
            return None
        return {k: value[k] for k in sorted(value)}

    @property
    def curve(self) -> WeierstrassCurve:
        return WeierstrassCurve.from_ainvs(self.ainvs)

    @property
    def key(self) -> str:
        return normalize_label(self.label)

    @property
    def keys(self) -> FrozenSet[str]:
        """Every label this record answers to."""
        labels = {self.key}
        if self.lmfdb_label:
            labels.add(normalize_label(self.lmfdb_label))
        return frozenset(labels)


def parse_record(text: Union[str, bytes], source: str = "<string>") -> CurveRecord:
    """
    Parse and schema-check one JSON record (no arithmetic cross-checks).

    Raises:
        RecordValidationError: If the text is not JSON or does not fit the schema
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise RecordValidationError(
            f"record is not valid JSON: {e}", details={"source": source}
        ) from e
    return record_from_payload(payload, source)


def record_from_payload(payload: Any, source: str = "<payload>") -> CurveRecord:
    try:
        return CurveRecord.model_validate(payload)
    except ValidationError as e:
        raise RecordValidationError(
            f"record does not match schema {SCHEMA_VERSION}: {e.error_count()} error(s)",
            details={"source": source, "errors": e.errors(include_url=False)},
        ) from e


def validate_record(record: CurveRecord) -> CurveRecord:
    """
    Cross-check a record against the curve arithmetic. Never modifies the record.

    Checks the model is nonsingular, the attested conductor equals the conductor of the
    minimal model, attested Tamagawa numbers agree with Tate's algorithm, and the codomain
    of an attested isogeny has the same conductor.

    Raises:
        RecordValidationError: On any mismatch, with attested and computed values
    """
    try:
        E = record.curve
    except CurveError as e:
        raise RecordValidationError(
            f"{record.label}: {e.message}", details={"label": record.label, **e.details}
        ) from e

    computed = conductor(E)
    if computed != record.conductor:
        raise RecordValidationError(
            f"{record.label}: attested conductor {record.conductor} "
            f"but the minimal model has conductor {computed}",
            details={
                "label": record.label,
                "field": "conductor",
                "attested": record.conductor,
                "computed": computed,
            },
        )

    if record.tamagawa is not None:
        local = tamagawa_numbers(E)
        primes = sorted(set(local) | set(record.tamagawa))
        for ell in primes:
            attested, ours = record.tamagawa.get(ell, 1), local.get(ell, 1)
            if attested != ours:
                raise RecordValidationError(
                    f"{record.label}: attested c_{ell} = {attested} "
                    f"but Tate's algorithm gives {ours}",
                    details={
                        "label": record.label,
                        "field": "tamagawa",
                        "prime": ell,
                        "attested": attested,
                        "computed": ours,
                    },
                )

    if record.isogeny is not None and record.isogeny.codomain_ainvs is not None:
        try:
            codomain_conductor = conductor(record.isogeny.codomain)  # type: ignore[arg-type]
        except CurveError as e:
            raise RecordValidationError(
                f"{record.label}: isogeny codomain: {e.message}",
                details={"label": record.label, "field": "isogeny"},
            ) from e
        if codomain_conductor != computed:
            raise RecordValidationError(
                f"{record.label}: isogeny codomain has conductor {codomain_conductor}, "
                f"not {computed}",
                details={
                    "label": record.label,
                    "field": "isogeny",
                    "attested": codomain_conductor,
                    "computed": computed,
                },
            )

    logger.debug(f"record {record.label} validated (N = {computed})")
    return record


def load_record_file(path: Union[str, Path]) -> CurveRecord:
    """
    Read, parse and cross-check a record file.

    Raises:
        RecordNotFoundError: If the file does not exist
        RecordValidationError: If parsing or a cross-check fails
    """
    path = Path(path)
    if not path.is_file():
        raise RecordNotFoundError(f"No record file at {path}", details={"path": str(path)})
    return validate_record(parse_record(path.read_text(encoding="utf-8"), source=str(path)))


def dump_record(record: CurveRecord) -> str:
    """Normalized JSON text of a record; ``dump_record(parse_record(dump_record(r)))`` is stable."""
    payload = record.model_dump(mode="json", by_alias=True)
    return json.dumps(payload, indent=2) + "\n"
