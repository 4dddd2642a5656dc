"""Exact Riordan arrays over truncated formal power series, and the Laguerre
polynomial families they generate.

Everything is computed over arbitrary-precision rationals; the package has no
floating-point path.
"""

from .algebra import (
    NotDivisibleError,
    Polynomial,
    Rational,
    X,
    Y,
    exact_divide_by_power,
    rodrigues_step_biv,
    rodrigues_step_uni,
)
from .array2 import RiordanArray
from .array3 import ColumnFamily, RiordanTriple
from .laguerre import (
    LaguerrePolynomial,
    biv_explicit,
    biv_riordan_table,
    biv_rodrigues,
    biv_via_uni,
    signed_pascal_pair,
    signed_pascal_triple,
    uni_explicit,
    uni_recurrence,
    uni_riordan,
    uni_rodrigues,
    y_weighted_pascal_triple,
)
from .series import BiSeries, DEFAULT_ORDER, Series, const_series, geom, neg_t_geom, t_series
from .verify import CheckReport, HarnessConfig, run_all

__version__ = "0.1.0"

__all__ = [
    "BiSeries",
    "CheckReport",
    "ColumnFamily",
    "DEFAULT_ORDER",
    "HarnessConfig",
    "LaguerrePolynomial",
    "NotDivisibleError",
    "Polynomial",
    "Rational",
    "RiordanArray",
    "RiordanTriple",
    "Series",
    "X",
    "Y",
    "biv_explicit",
    "biv_riordan_table",
    "biv_rodrigues",
    "biv_via_uni",
    "const_series",
    "exact_divide_by_power",
    "geom",
    "neg_t_geom",
    "rodrigues_step_biv",
    "rodrigues_step_uni",
    "run_all",
    "signed_pascal_pair",
    "signed_pascal_triple",
    "t_series",
    "uni_explicit",
    "uni_recurrence",
    "uni_riordan",
    "uni_rodrigues",
    "y_weighted_pascal_triple",
]
