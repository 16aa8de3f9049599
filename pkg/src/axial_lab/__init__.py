"""Exact computation with PC(eta)-axial algebras.

Scalars live in Q, GF(p) or a rational function field; algebras are given by
structure constants on a labelled basis.
"""

from .algebra import (Algebra, AlgebraError, Element, LoadError, adjoint_matrix, is_idempotent,
                      multiply, principal_power, subalgebra_closure)
from .axial import (AxialError, BilinearForm, FormValues, FusionLaw, InadmissibleEta,
                    PeirceDecomposition, axis_orbit, axis_spanning_set, check_fusion,
                    frobenius_form, frobenius_from_axes, frobenius_from_orbit, is_primitive,
                    miyamoto, peirce_decompose, projection_coefficient, weight_of)
from .catalog import (build_three_generic, build_three_minus_one, build_two_dim_degenerate,
                      build_two_generated, eigenbasis_vectors, expected_gram_determinant,
                      gram_three_minus_one)
from .linalg import Matrix, determinant, inverse, kernel_basis, rank, rref, solve
from .scalars import QQ, function_field, is_admissible_eta, prime_field, scalar_format, scalar_parse

__all__ = [
    "QQ", "Algebra", "AlgebraError", "AxialError", "BilinearForm", "Element", "FormValues",
    "FusionLaw", "InadmissibleEta", "LoadError", "Matrix", "PeirceDecomposition",
    "adjoint_matrix", "axis_orbit", "axis_spanning_set", "build_three_generic",
    "build_three_minus_one", "build_two_dim_degenerate", "build_two_generated", "check_fusion",
    "determinant", "eigenbasis_vectors", "expected_gram_determinant", "frobenius_form",
    "frobenius_from_axes", "frobenius_from_orbit", "function_field", "gram_three_minus_one",
    "inverse", "is_admissible_eta", "is_idempotent", "is_primitive", "kernel_basis", "miyamoto",
    "multiply", "peirce_decompose", "prime_field", "principal_power", "projection_coefficient",
    "rank", "rref", "scalar_format", "scalar_parse", "solve", "subalgebra_closure", "weight_of",
]
