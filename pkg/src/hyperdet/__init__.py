"""Exact nondegeneracy certificates for 3-tensors over the rationals.

The package decides, in exact arithmetic, whether a 3-tensor
phi : A (x) B -> C* admits a kernel pair (nonzero a, b with phi(a (x) b) = 0
over the algebraic closure).  In the boundary format
dimC = dimA + dimB - 1 this is the non-vanishing of the format's
hyperdeterminant.  On top of the decision it provides SL(2) equivariant
tensor construction via transvectants, Steiner-style presentation matrices,
and an enumeration harness checking that the multiplication of binary forms
is the only nondegenerate equivariant tensor in boundary format.

Hot kernels run on a compiled Cython backend when available; see
``hyperdet.BACKEND``.
"""

from .kernels import BACKEND
from .linalg import Matrix, Rational, rational_from_str, rational_to_str
from .poly import (
    GREVLEX,
    LEX,
    Polynomial,
    binary_form_gcd,
    groebner_basis,
    is_projective_empty,
    maximal_minors,
    normal_form,
    projective_empty_binary,
)
from .tensor import (
    DEGENERATE,
    NONDEGENERATE,
    FieldHint,
    Tensor3,
    Verdict,
    contract,
    flattening_rank,
    is_nondegenerate,
    kernel_pair_witness,
    minor_ideal,
    random_tensor,
    slice_matrix,
    symbolic_slice,
    tangency_witness,
)
from .sl2 import (
    ModuleSpec,
    action_matrices,
    equivariant_basis,
    is_equivariant,
    module_specs_of_dim,
    multiplication_tensor,
    theorem_cases,
    transvectant_map,
    verify_theorem,
)
from .bundle import (
    LinearFormMatrix,
    constant_rank_check,
    fiber_at,
    steiner_presentation,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DEGENERATE",
    "FieldHint",
    "GREVLEX",
    "LEX",
    "LinearFormMatrix",
    "Matrix",
    "ModuleSpec",
    "NONDEGENERATE",
    "Polynomial",
    "Rational",
    "Tensor3",
    "Verdict",
    "action_matrices",
    "binary_form_gcd",
    "constant_rank_check",
    "contract",
    "equivariant_basis",
    "fiber_at",
    "flattening_rank",
    "groebner_basis",
    "is_equivariant",
    "is_nondegenerate",
    "is_projective_empty",
    "kernel_pair_witness",
    "maximal_minors",
    "minor_ideal",
    "module_specs_of_dim",
    "multiplication_tensor",
    "normal_form",
    "projective_empty_binary",
    "random_tensor",
    "rational_from_str",
    "rational_to_str",
    "slice_matrix",
    "steiner_presentation",
    "symbolic_slice",
    "tangency_witness",
    "theorem_cases",
    "transvectant_map",
    "verify_theorem",
    "__version__",
]
