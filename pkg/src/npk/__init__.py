"""Exact-arithmetic toolkit for n-ary Poisson brackets.

Everything runs over the rationals with zero tolerance: exterior algebra
kernels, exact linear algebra, decomposability and factorization of
multivectors, the n-ary bracket with its generalized Jacobi identity,
the Poisson and Nambu classification of polynomial multivector fields,
and the compatibility operator calculus.  All values are immutable after
construction and all operations are pure functions.
"""

from .compat import Compatibility, IncompatibleFieldError, delta, gradient_contraction, is_compatible
from .exterior import (
    Covector,
    MultiCovector,
    Multivector,
    contract_covector,
    contract_form,
    wedge,
)
from .fields import (
    MultivectorField,
    coordinate_vector_field,
    differential_defect,
    jacobi_defect,
    jacobi_identity_holds,
    lie_bracket,
    nary_bracket,
)
from .grassmann import (
    ContractionSubspaceReport,
    Factorization,
    IrreducibilityKind,
    IrreducibilityVerdict,
    NotDecomposableError,
    SharpProfile,
    contraction_subspace_report,
    contractions_decomposable,
    factorize,
    irreducibility_check,
    is_decomposable,
    sharp_profile,
)
from .linalg import Subspace, intersect, rank_kernel_image, subspace_sum
from .poisson import (
    PoissonVerdict,
    algebraic_condition,
    block_sum,
    build_semidecomposable,
    classify,
    coordinate_semidecomposable,
    default_sample_points,
    differential_condition,
    involutivity_sample,
    is_nambu_algebraic,
    pointwise_decomposable,
)
from .polynomial import Polynomial
from .specio import SpecError, TensorSpec, from_field, parse_spec, parse_spec_text, serialize, to_field

__version__ = "0.1.0"

__all__ = [
    "Compatibility",
    "ContractionSubspaceReport",
    "Covector",
    "Factorization",
    "IncompatibleFieldError",
    "IrreducibilityKind",
    "IrreducibilityVerdict",
    "MultiCovector",
    "Multivector",
    "MultivectorField",
    "NotDecomposableError",
    "PoissonVerdict",
    "Polynomial",
    "SharpProfile",
    "SpecError",
    "Subspace",
    "TensorSpec",
    "algebraic_condition",
    "block_sum",
    "build_semidecomposable",
    "classify",
    "contract_covector",
    "contract_form",
    "contraction_subspace_report",
    "contractions_decomposable",
    "coordinate_semidecomposable",
    "coordinate_vector_field",
    "default_sample_points",
    "delta",
    "differential_condition",
    "differential_defect",
    "factorize",
    "from_field",
    "gradient_contraction",
    "intersect",
    "involutivity_sample",
    "irreducibility_check",
    "is_compatible",
    "is_decomposable",
    "is_nambu_algebraic",
    "jacobi_defect",
    "jacobi_identity_holds",
    "lie_bracket",
    "nary_bracket",
    "parse_spec",
    "parse_spec_text",
    "pointwise_decomposable",
    "rank_kernel_image",
    "serialize",
    "sharp_profile",
    "subspace_sum",
    "to_field",
    "wedge",
]
