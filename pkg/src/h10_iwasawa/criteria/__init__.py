"""Criteria engines: Euler characteristic, H10-gen verdicts, Kriz-Li sets and Selmer ratios."""

from .euler import euler_char_check
from .h10 import h10_check
from .isogeny import isogeny3_density, isogeny3_preconditions
from .kriz_li import (
    KrizLiConditions,
    is_catalogued,
    kriz_li_catalogue,
    kriz_li_conditions,
    kriz_li_density,
    kriz_li_density_formula,
    kriz_li_preconditions,
    kriz_li_S_test,
    kriz_li_twist_family,
    s_primes,
)
from .models import (
    EXCLUDED_LINE_UNIDENTIFIED,
    INFINITY,
    AmbiguousSelmerRatio,
    EulerCharacteristic,
    HypothesisStatus,
    ScanReport,
    ScanRow,
    SelmerRatio,
    SelmerRatioReport,
    TInvariant,
    Verdict,
    ord3,
)
from .scan import negative_squarefree_range, scan
from .selmer_ratio import (
    IsogenyTwist,
    global_candidates,
    local_ratios,
    selmer_ratio_local,
    t0prime_membership,
    t_invariant,
    twist_selmer_report,
)

__all__ = [
    # Models
    "HypothesisStatus",
    "Verdict",
    "EulerCharacteristic",
    "SelmerRatio",
    "AmbiguousSelmerRatio",
    "TInvariant",
    "SelmerRatioReport",
    "ScanRow",
    "ScanReport",
    "INFINITY",
    "EXCLUDED_LINE_UNIDENTIFIED",
    "ord3",
    # Cyclotomic criterion and verdicts
    "euler_char_check",
    "h10_check",
    # Kriz-Li
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
    # 3-isogenies
    "isogeny3_density",
    "isogeny3_preconditions",
    "IsogenyTwist",
    "selmer_ratio_local",
    "local_ratios",
    "global_candidates",
    "t_invariant",
    "t0prime_membership",
    "twist_selmer_report",
    # Scans
    "scan",
    "negative_squarefree_range",
]
