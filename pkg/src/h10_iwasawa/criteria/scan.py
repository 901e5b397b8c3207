"""
Scan a range of twist parameters d for one curve and prime.

Each d is checked independently on a thread pool; rows come back in input order
regardless of ``jobs``. A failure for one d is logged and reported as an "error" row.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, List, Optional

from ..curves import is_squarefree
from ..exceptions import H10IwasawaError, InputValidationError
from ..ingest import CurveRecord, RecordStore
from ..padic import require_odd_prime
from ..utils import handle_operation_error, safe_operation
from .h10 import h10_check
from .models import ScanReport, ScanRow
from .selmer_ratio import twist_selmer_report

logger = logging.getLogger(__name__)

__all__ = ["scan", "negative_squarefree_range"]


def negative_squarefree_range(d_min: int, d_max: int) -> List[int]:
    """Squarefree d with d_min <= d <= d_max < 0, from -1 downwards."""
    if d_max >= 0:
        raise InputValidationError(
            f"scan range must be negative, got d_max = {d_max}", details={"d_max": d_max}
        )
    return [d for d in range(d_max, d_min - 1, -1) if is_squarefree(d)]


def _scan_one(
    record: CurveRecord,
    p: int,
    d: int,
    store: Optional[RecordStore],
    isogeny_mode: bool,
) -> ScanRow:
    twist = None
    if store is not None:
        twist = safe_operation(
            f"twist record lookup for d = {d}",
            lambda: store.find_twist(record, d),
            context={"curve": record.label, "d": d},
            logger=logger,
            exception_types=(H10IwasawaError, OSError),
        )
    verdict = h10_check(record, p, d, twist_record=twist)
    if verdict.satisfied:
        status = "satisfied"
    elif verdict.failed:
        status = "not-established"
    else:
        status = "unknown"

    t = None
    if isogeny_mode:
        parity = twist.sel3_dim if twist is not None else None
        t = twist_selmer_report(record, d, parity=parity).t

    return ScanRow(
        d=d,
        status=status,
        twist_label=twist.label if twist is not None else None,
        lambda_cyc_K=verdict.lambda_cyc_K,
        failed=[h.name for h in verdict.failed],
        unknown=[h.name for h in verdict.unknown],
        t=t,
    )


def scan(
    record: CurveRecord,
    p: int,
    ds: Iterable[int],
    store: Optional[RecordStore] = None,
    jobs: int = 1,
    isogeny_mode: bool = False,
) -> ScanReport:
    """
    Verdict rows for every d in ``ds``.

    A row is "satisfied" when every hypothesis passed, "not-established" when one
    failed, "unknown" when only missing attested data blocks it, and "error" when the
    check itself raised.

    Args:
        record: Attested record of E
        p: Odd prime
        ds: Negative squarefree twist parameters
        store: Where twist records are looked up; without it twist data is unknown
        jobs: Worker threads
        isogeny_mode: Also compute t(phi_d) for the attested 3-isogeny

    Raises:
        InputValidationError: If p is not an odd prime or jobs < 1
    """
    require_odd_prime(p)
    if jobs < 1:
        raise InputValidationError(f"jobs must be >= 1, got {jobs}", details={"jobs": jobs})
    ds = list(ds)

    def run(d: int) -> ScanRow:
        try:
            return _scan_one(record, p, d, store, isogeny_mode)
        except H10IwasawaError as e:
            handle_operation_error(
                f"H10-gen check for d = {d}",
                e,
                context={"curve": record.label, "p": p, "d": d},
                logger=logger,
            )
            return ScanRow(d=d, status="error", error=e.message)

    with ThreadPoolExecutor(max_workers=jobs) as executor:
        rows = list(executor.map(run, ds))

    report = ScanReport(curve=record.label, p=p, isogeny_mode=isogeny_mode, rows=rows)
    logger.info(f"scan {record.label} at {p}: {report.summary()}")
    return report
