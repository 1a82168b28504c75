"""Exact spin projection operators via operator Lagrange interpolation."""

from .exact import BigRational, HalfInt, factorial, format_rational, parse_rational, spin_range
from .opcalc import DenseMatrix, VerificationReport, eval_on_diagonal, eval_on_matrix, run_suite
from .poly import NodeSet, Polynomial, interpolate, lagrange_basis, node_polynomial, poly_divmod, reduce_mod
from .spin import (
    DiagonalOperator,
    MagneticQuantum,
    SpinQuantum,
    alpha,
    operator_function,
    projector_coefficient,
    projector_polynomial,
    reduce_power,
    sz_operator,
)

__all__ = [
    "BigRational", "HalfInt", "factorial", "format_rational", "parse_rational", "spin_range",
    "Polynomial", "NodeSet", "interpolate", "lagrange_basis", "node_polynomial", "poly_divmod",
    "reduce_mod", "SpinQuantum", "MagneticQuantum", "DiagonalOperator", "alpha", "sz_operator",
    "projector_coefficient", "projector_polynomial", "operator_function", "reduce_power",
    "DenseMatrix", "VerificationReport", "eval_on_diagonal", "eval_on_matrix", "run_suite",
]
