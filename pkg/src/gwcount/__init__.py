"""Exact genus-0 curve counts in projective spaces.

Complex Gromov-Witten invariants of P^N with hyperplane-power insertions and
real invariants of odd projective spaces P^{2n-1}, both computed exactly over
arbitrary-precision integers by memoized WDVV-type recursions, plus
closed-form P^3 series, persistent caching, golden tables, and consistency
checks.
"""

from .cache import CacheError, CacheFormatError, CacheIntegrityError, CacheStore
from .complex_engine import ComplexEvalContext, canonical_pivot, eval_complex
from .keys import (
    CodimVector,
    ComplexKey,
    RealKey,
    binomial,
    complex_dimension_gap,
    enumerate_splits,
    normalize_insertions,
    real_dimension_gap,
)
from .p3 import (
    P3Series,
    complex_series_p3,
    congruence_mod4_report,
    parity_report,
    real_series_p3,
)
from .real_engine import (
    RealEvalContext,
    canonical_designation,
    eval_real,
    theorem12_residual,
)
from .reports import CheckReport, CheckResult
from .tables import TableRow, table1_rows, table2_rows

__version__ = "0.1.0"

__all__ = [
    "CacheError",
    "CacheFormatError",
    "CacheIntegrityError",
    "CacheStore",
    "CheckReport",
    "CheckResult",
    "CodimVector",
    "ComplexEvalContext",
    "ComplexKey",
    "P3Series",
    "RealEvalContext",
    "RealKey",
    "TableRow",
    "binomial",
    "canonical_designation",
    "canonical_pivot",
    "complex_dimension_gap",
    "complex_series_p3",
    "congruence_mod4_report",
    "enumerate_splits",
    "eval_complex",
    "eval_real",
    "normalize_insertions",
    "parity_report",
    "real_dimension_gap",
    "real_series_p3",
    "table1_rows",
    "table2_rows",
    "theorem12_residual",
    "__version__",
]
