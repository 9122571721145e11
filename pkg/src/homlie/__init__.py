"""Exact computer algebra for hom-Lie algebras: representations and
cohomology, O-operators and induced structures, deformations with
obstructions, Nijenhuis elements, and skew r-matrices.

All arithmetic is over the rationals via fractions.Fraction; every check
is exact and every reported failure pinpoints the basis tuple that
breaks the law being tested.
"""

from .linalg import Matrix, Q, format_scalar, parse_scalar
from .cochain import (
    Cochain,
    CohomologyDims,
    ComplexDescriptor,
    coboundary,
    coboundary_matrix,
    cohomology_dims,
    compatible_subspace_basis,
    zero_coboundary,
)
from .deformation import (
    EquivalenceReport,
    ExtensionResult,
    FormalDeformationReport,
    InfinitesimalReport,
    LinearDeformationReport,
    NijenhuisElementReport,
    TrivialDeformationResult,
    TruncatedDeformation,
    equivalence_check,
    extend_order,
    formal_deformation_check,
    infinitesimal_check,
    linear_deformation_check,
    nijenhuis_element_check,
    obstruction,
    trivial_deformation_from_nijenhuis,
)
from .graded import (
    build_theta,
    check_maurer_cartan,
    circle_product,
    derived_bracket,
    derived_bracket_zero,
    nr_bracket,
)
from .ooperator import (
    HomPreLie,
    build_nt,
    graph_check,
    induced_hom_pre_lie,
    is_o_operator,
    is_rota_baxter,
    nijenhuis_operator_check,
    o_operator_hom_check,
    o_operator_maurer_cartan_check,
    operator_coboundary,
    operator_complex,
    rb_induced_bracket,
    rho_t,
    subadjacent,
    verify_hom_pre_lie,
)
from .rmatrix import (
    WedgeTwoTensor,
    cybe_sum,
    graded_bracket_wedge,
    induced_dual_bracket,
    invariant_two_tensor_basis,
    invariant_wedge_basis,
    is_invariant,
    is_r_matrix,
    operator_to_tensor,
    rmatrix_deformation_transfer,
    tensor_to_operator,
    two_tensor_square,
    weak_homomorphism_check,
)
from .structures import (
    HomLieAlgebra,
    Representation,
    adjoint_rep,
    catalog,
    coadjoint_rep,
    dual_rep,
    from_lie_with_morphism,
    semidirect_product,
    trivial_rep,
    verify_hom_lie,
    verify_representation,
)

__all__ = [
    "Cochain",
    "CohomologyDims",
    "ComplexDescriptor",
    "EquivalenceReport",
    "ExtensionResult",
    "FormalDeformationReport",
    "HomLieAlgebra",
    "HomPreLie",
    "InfinitesimalReport",
    "LinearDeformationReport",
    "Matrix",
    "NijenhuisElementReport",
    "Q",
    "Representation",
    "TrivialDeformationResult",
    "TruncatedDeformation",
    "WedgeTwoTensor",
    "adjoint_rep",
    "build_nt",
    "build_theta",
    "catalog",
    "check_maurer_cartan",
    "circle_product",
    "coadjoint_rep",
    "coboundary",
    "coboundary_matrix",
    "cohomology_dims",
    "compatible_subspace_basis",
    "cybe_sum",
    "derived_bracket",
    "derived_bracket_zero",
    "dual_rep",
    "equivalence_check",
    "extend_order",
    "formal_deformation_check",
    "format_scalar",
    "from_lie_with_morphism",
    "graded_bracket_wedge",
    "graph_check",
    "induced_dual_bracket",
    "induced_hom_pre_lie",
    "infinitesimal_check",
    "invariant_two_tensor_basis",
    "invariant_wedge_basis",
    "is_invariant",
    "is_o_operator",
    "is_r_matrix",
    "is_rota_baxter",
    "linear_deformation_check",
    "nijenhuis_element_check",
    "nijenhuis_operator_check",
    "nr_bracket",
    "o_operator_hom_check",
    "o_operator_maurer_cartan_check",
    "obstruction",
    "operator_coboundary",
    "operator_complex",
    "operator_to_tensor",
    "parse_scalar",
    "rb_induced_bracket",
    "rho_t",
    "rmatrix_deformation_transfer",
    "semidirect_product",
    "subadjacent",
    "tensor_to_operator",
    "trivial_deformation_from_nijenhuis",
    "trivial_rep",
    "two_tensor_square",
    "verify_hom_lie",
    "verify_hom_pre_lie",
    "verify_representation",
    "weak_homomorphism_check",
    "zero_coboundary",
]
