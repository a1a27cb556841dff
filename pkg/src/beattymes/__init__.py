"""Exact complementary Beatty sequences and the MEX / MES algorithms."""

from .decomposition import (
    SlopeBundle,
    VerificationReport,
    derived_slopes,
    fixed_point_slope,
    frequency_k,
    slope_from_defining,
)
from .exact import PHI, Ordering, QuadExpr, compare, floor_mul, make, parse_slope, rational
from .mesalg import MESRun, derive_skipping, golden_c_rule, mes_from_defining, mex, mex_k, run_mes, run_mex
from .sequences import BeattySeq, ComplementaryPair, complement_slope, orient_pair, sortjoin

__all__ = [
    "BeattySeq",
    "ComplementaryPair",
    "MESRun",
    "Ordering",
    "PHI",
    "QuadExpr",
    "SlopeBundle",
    "VerificationReport",
    "compare",
    "complement_slope",
    "derive_skipping",
    "derived_slopes",
    "fixed_point_slope",
    "floor_mul",
    "frequency_k",
    "golden_c_rule",
    "make",
    "mes_from_defining",
    "mex",
    "mex_k",
    "orient_pair",
    "parse_slope",
    "rational",
    "run_mes",
    "run_mex",
    "slope_from_defining",
    "sortjoin",
]

__version__ = "0.1.0"
