"""Genus, p-rank and a-number of Artin-Schreier curves ``y^p - y = f(x)``."""

from .arith import FpPoly, parse_poly
from .bounds import lower_bound_multi, lower_bound_single, upper_bound
from .cartier import cartier_matrix
from .curve import Curve, as_equivalent, curve_new
from .holo import basis_enumerate, genus
from .linalg import BACKEND
from .report import InvariantReport, invariants

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Curve",
    "FpPoly",
    "InvariantReport",
    "as_equivalent",
    "basis_enumerate",
    "cartier_matrix",
    "curve_new",
    "genus",
    "invariants",
    "lower_bound_multi",
    "lower_bound_single",
    "parse_poly",
    "upper_bound",
]
