"""
h10-iwasawa - Iwasawa-theoretic criteria for Hilbert's tenth problem in Z_p-extensions

Checks, for an elliptic curve E over Q, an odd prime p and an imaginary quadratic
field K = Q(sqrt(d)), the hypotheses under which Hilbert's tenth problem has a negative
answer in the finite layers of all but one Z_p-extension of K, and evaluates the
density formulas for families of good quadratic twists.

Core Features:
- Capped-precision p-adic arithmetic and truncated power series in one and two variables
- Line specialization of bivariate characteristic series, (mu, lambda), excluded line
- Elliptic curves: minimal models, Tate's algorithm, point counts, mod-2 image, 3-isogenies
- Fail-closed verdicts: every hypothesis is computed, attested, or unknown
- Kriz-Li auxiliary primes and densities; 3-isogeny densities and Selmer ratios
- Attested records: bundled fixtures, an on-disk cache, and an LMFDB client

Usage:
    import h10_iwasawa as h10

    store = h10.RecordStore(offline=True)
    E = store.get("58a1")
    verdict = h10.h10_check(E, 17, -1, twist_record=store.find_twist(E, -1))
    verdict.h10gen                      # 'satisfied'

    h10.s_primes(store.get("37a1"), h10.make_field(-7), 11, bound=700)
    # [53, 149, 337, 373, 613]

    h10.isogeny3_density(209)           # Fraction(209, 1440)

Command line:
    h10-iwasawa check --curve 58a1 --p 17 --d -1
    h10-iwasawa sprimes --curve 37a1 --k0 -7 --p 11 --bound 700
"""

__version__ = "0.1.0"

from .config import CliConfig
from .criteria import (
    EulerCharacteristic,
    HypothesisStatus,
    ScanReport,
    SelmerRatioReport,
    Verdict,
    euler_char_check,
    h10_check,
    isogeny3_density,
    kriz_li_density,
    kriz_li_density_formula,
    kriz_li_S_test,
    s_primes,
    scan,
    twist_selmer_report,
)
from .curves import WeierstrassCurve, conductor, minimal_model, quadratic_twist, tate_algorithm
from .exceptions import (
    CriteriaError,
    CurveError,
    H10IwasawaError,
    IngestError,
    InputValidationError,
    PadicError,
    SeriesError,
)
from .ingest import CurveRecord, RecordCache, RecordStore, load_record
from .padic import PadicNumber, ProjectiveLineFp
from .quad import ImagQuadField, make_field
from .series import (
    BivariateSeries,
    UnivariateSeries,
    excluded_line,
    implicit_solve,
    line_series,
    mu_lambda,
    specialize_line,
)

__all__ = [
    "__version__",
    # Configuration
    "CliConfig",
    # Arithmetic
    "PadicNumber",
    "ProjectiveLineFp",
    "ImagQuadField",
    "make_field",
    # Series
    "UnivariateSeries",
    "BivariateSeries",
    "line_series",
    "implicit_solve",
    "specialize_line",
    "mu_lambda",
    "excluded_line",
    # Curves
    "WeierstrassCurve",
    "minimal_model",
    "conductor",
    "tate_algorithm",
    "quadratic_twist",
    # Records
    "CurveRecord",
    "RecordCache",
    "RecordStore",
    "load_record",
    # Criteria
    "HypothesisStatus",
    "Verdict",
    "EulerCharacteristic",
    "ScanReport",
    "SelmerRatioReport",
    "euler_char_check",
    "h10_check",
    "kriz_li_S_test",
    "s_primes",
    "kriz_li_density",
    "kriz_li_density_formula",
    "isogeny3_density",
    "twist_selmer_report",
    "scan",
    # Exceptions
    "H10IwasawaError",
    "PadicError",
    "SeriesError",
    "CurveError",
    "CriteriaError",
    "IngestError",
    "InputValidationError",
]
