"""Exact lambda-analogues of r-Stirling numbers of the first kind and their identities."""

from .families import (
    Family,
    FamilyParams,
    daehee_number,
    daehee_polynomial,
    falling_factorial_lambda,
    r_stirling1_lambda,
    stirling1_classical,
    stirling1_lambda,
    stirling2_classical,
    triangle,
    unsigned_r_stirling1_lambda,
    whitney_numbers,
    whitney_type_T,
)
from .identities import IdentityCheck, IdentityReport, SuiteConfig, check, run_suite
from .scalars import LamRPoly, binomial, parse_scalar, format_scalar, poly_eval
from .series import TruncatedSeries, daehee_gf, r_stirling_gf
from .xpoly import XPoly, expand_linear_product

__version__ = "0.1.0"

__all__ = [
    "Family",
    "FamilyParams",
    "IdentityCheck",
    "IdentityReport",
    "LamRPoly",
    "SuiteConfig",
    "TruncatedSeries",
    "XPoly",
    "binomial",
    "check",
    "daehee_gf",
    "daehee_number",
    "daehee_polynomial",
    "expand_linear_product",
    "falling_factorial_lambda",
    "format_scalar",
    "parse_scalar",
    "poly_eval",
    "r_stirling1_lambda",
    "r_stirling_gf",
    "run_suite",
    "stirling1_classical",
    "stirling1_lambda",
    "stirling2_classical",
    "triangle",
    "unsigned_r_stirling1_lambda",
    "whitney_numbers",
    "whitney_type_T",
]
