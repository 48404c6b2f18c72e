"""Exact verification of filtration depth, evaluation-code tradeoffs and arc bounds."""

from .code import EvaluationSet, LinearCode, eval_code, min_distance, weight_distribution
from .curve import INFINITY, CurvePoint, CurveSpec, Divisor, affine_points, rational_points
from .errors import HierDepthError
from .filtration import RSClass, build_chain, mds_depth, optimal_index, tradeoff
from .gf import FieldElement, FieldSpec, field_new
from .rrspace import rr_basis, rr_dimension

__version__ = "0.1.0"

__all__ = [
    "CurvePoint",
    "CurveSpec",
    "Divisor",
    "EvaluationSet",
    "FieldElement",
    "FieldSpec",
    "HierDepthError",
    "INFINITY",
    "LinearCode",
    "RSClass",
    "affine_points",
    "build_chain",
    "eval_code",
    "field_new",
    "mds_depth",
    "min_distance",
    "optimal_index",
    "rational_points",
    "rr_basis",
    "rr_dimension",
    "tradeoff",
    "weight_distribution",
]
