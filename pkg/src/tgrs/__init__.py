"""Twisted generalized Reed-Solomon codes over finite fields."""

from .algebra import (
    Matrix,
    Poly,
    elementary_symmetric,
    mat_mul,
    mat_transpose,
    null_space,
    poly_derivative,
    poly_eval,
    poly_from_roots,
    rank,
    row_span_contains,
    rref,
)
from .codes import EvaluationSet, LinearCode, TgrsParams, grs_generator, make_params, tgrs_generator, u_vector
from .distance import DistanceReport, classify_distance
from .dual import DualWitness, dual_as_tgrs, dual_witness
from .gf import FieldElement, FieldSpec, field_make, parse_field
from .oracles import inclusion_chain_check, mds_column_test, min_distance_bruteforce, weight_distribution
from .selfdual import SelfDualCertificate, self_dual_build_char2, self_dual_check
from .subset_product import subset_product_solve

__version__ = "0.1.0"

__all__ = [
    "classify_distance",
    "DistanceReport",
    "dual_as_tgrs",
    "dual_witness",
    "DualWitness",
    "elementary_symmetric",
    "EvaluationSet",
    "field_make",
    "FieldElement",
    "FieldSpec",
    "grs_generator",
    "inclusion_chain_check",
    "LinearCode",
    "make_params",
    "mat_mul",
    "mat_transpose",
    "Matrix",
    "mds_column_test",
    "min_distance_bruteforce",
    "null_space",
    "parse_field",
    "Poly",
    "poly_derivative",
    "poly_eval",
    "poly_from_roots",
    "rank",
    "row_span_contains",
    "rref",
    "self_dual_build_char2",
    "self_dual_check",
    "SelfDualCertificate",
    "subset_product_solve",
    "tgrs_generator",
    "TgrsParams",
    "u_vector",
    "weight_distribution",
]
