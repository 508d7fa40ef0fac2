"""Exact degrees of Stiefel varieties St(k, n) and the combinatorics behind them."""

from .degree import (DegreeResult, PathConfig, aztec_check, degree, degree_table,
                     degree_via_integral, lgv_matrix, path_config, regime)
from .errors import ConsistencyError, DimensionError, DomainError, SizeError
from .exact import Matrix, binomial, det, factorial
from .gt import GTFilling, GTShape, count_invariants, dim_irrep, enumerate_fillings
from .kernels import HAVE_COMPILED
from .symb import MultiPoly, alt_poly, integral_product_simplex
from .volumes import VolumeFormula, vol_closed, vol_so_n, vol_symbolic
from .weights import dim_stiefel, omega, omega_closed, omega_recursive

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError", "DegreeResult", "DimensionError", "DomainError", "GTFilling",
    "GTShape", "HAVE_COMPILED", "Matrix", "MultiPoly", "PathConfig", "SizeError",
    "VolumeFormula", "alt_poly", "aztec_check", "binomial", "count_invariants", "degree",
    "degree_table", "degree_via_integral", "det", "dim_irrep", "dim_stiefel",
    "enumerate_fillings", "factorial", "integral_product_simplex", "lgv_matrix", "omega",
    "omega_closed", "omega_recursive", "path_config", "regime", "vol_closed", "vol_so_n",
    "vol_symbolic",
]
