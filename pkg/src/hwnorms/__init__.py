"""Exact inner products of lowering-operator states in highest-weight representations."""

from .algebra import (AlgebraSpec, PositiveRoot, algebra, cartan_matrix, fundamental_weight_in_roots,
                      minuscule_indices, parse_algebra, positive_roots)
from .errors import DomainError, ResourceError
from .kw_boundary import (ChiExpansion, Cocharacter, boundary_residual, chi_expansion, evaluate_chi,
                          pair_with_cocharacter, state_coefficients, weight_norm)
from .shapovalov import (GramMatrix, InnerProductEngine, StateCombination, apply_raising, gram_matrix,
                         inner_product, inner_product_oracle)
from .special_norms import (Burst, StaircaseSpec, prefixed_staircase_norm, scan_coefficient_positivity,
                            staircase_norm, verify_minuscule_gram)
from .weightsys import (WeightSystem, build_weight_system, enumerate_paths, weight_of_word,
                        weight_string)

__all__ = [
    "AlgebraSpec", "PositiveRoot", "algebra", "cartan_matrix", "fundamental_weight_in_roots",
    "minuscule_indices", "parse_algebra", "positive_roots", "DomainError", "ResourceError",
    "ChiExpansion", "Cocharacter", "boundary_residual", "chi_expansion", "evaluate_chi",
    "pair_with_cocharacter", "state_coefficients", "weight_norm", "GramMatrix",
    "InnerProductEngine", "StateCombination", "apply_raising", "gram_matrix", "inner_product",
    "inner_product_oracle", "Burst", "StaircaseSpec", "prefixed_staircase_norm",
    "scan_coefficient_positivity", "staircase_norm", "verify_minuscule_gram", "WeightSystem",
    "build_weight_system", "enumerate_paths", "weight_of_word", "weight_string",
]
