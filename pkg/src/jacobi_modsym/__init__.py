"""Exact Fourier coefficients of Jacobi cusp forms from cuspidal modular symbols."""

from .arith import is_fundamental_discriminant, kronecker
from .cusps import Cusp, gamma0_equivalent
from .jacobi import (
    AdmissiblePair,
    AnyPairValue,
    NotApplicable,
    coefficient,
    coefficient_any_pair,
    coefficient_raw,
    find_pairs,
    normalization_scale,
)
from .lift import QExpansion, eigen_consistency, shimura_lift
from .modsym import ModularSymbol, boundary_check_weight2, intersection, parse_symbol, read_symbol
from .poly import HomPoly, Mat2, act, bracket
from .qf import BinaryQF, SupportQuery, enumerate_support, genus_character
from .table import CoefficientTable, batch_table, compare_tables, read_table

__version__ = "0.1.0"

__all__ = [
    "AdmissiblePair", "AnyPairValue", "BinaryQF", "CoefficientTable", "Cusp", "HomPoly", "Mat2",
    "ModularSymbol", "NotApplicable", "QExpansion", "SupportQuery", "act", "batch_table",
    "boundary_check_weight2", "bracket", "coefficient", "coefficient_any_pair", "coefficient_raw",
    "compare_tables", "eigen_consistency", "enumerate_support", "find_pairs", "gamma0_equivalent",
    "genus_character", "intersection", "is_fundamental_discriminant", "kronecker",
    "normalization_scale", "parse_symbol", "read_symbol", "read_table", "shimura_lift",
]
