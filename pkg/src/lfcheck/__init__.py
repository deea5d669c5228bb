"""Exact verification of cyclic invariance identities for matrix powers."""

from .exactring import DomainError, Poly, Ratio, entry_var, parse_scalar, ratio_eq
from .matrix import ExactMatrix, IdentityInstance, cycle_product, identity, mat_mul, mat_pow
from .digraph import digraph_of_matrix, is_acyclic, underlying_graph
from .hypotheses import (check_acyclic_matrix, check_certificate, check_triangle_condition,
                         cycle_ratio, hypothesis_report, search_certificate)
from .verify import check_reversal_bijection, verify_identity, walk_sum_oracle

__version__ = "0.1.0"

__all__ = [
    "DomainError", "Poly", "Ratio", "entry_var", "parse_scalar", "ratio_eq",
    "ExactMatrix", "IdentityInstance", "cycle_product", "identity", "mat_mul", "mat_pow",
    "digraph_of_matrix", "is_acyclic", "underlying_graph",
    "check_acyclic_matrix", "check_certificate", "check_triangle_condition", "cycle_ratio",
    "hypothesis_report", "search_certificate",
    "check_reversal_bijection", "verify_identity", "walk_sum_oracle",
]
