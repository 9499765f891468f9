"""Exact operators from coalgebra symbols.

A symbol g of a coalgebra with a sesquilinear pairing induces the linear
operator pi_g . (Q (x) id) . Delta . j; this package realizes that
construction with exact Gaussian-rational arithmetic for four concrete
coalgebras (quantum plane, divided powers, bounded degrees, matrix
units), together with matrices on basis windows, degree-shift
classification, Gram/positive-definiteness diagnostics, a text grammar,
a CLI, and a machine-checkable verification suite.
"""

from .core import (
    BasisKey,
    Coalgebra,
    DividedKey,
    Element,
    ManinKey,
    MatrixKey,
    NegDegKey,
    ProjectionPair,
    SesquilinearForm,
    TensorElement,
    TripleTensorElement,
    comul_extend,
    pair_extend,
    pi_action,
    project,
    star_extend,
)
from .engine import (
    BasisWindow,
    Classification,
    CoassociativityReport,
    GramResult,
    MatrixResult,
    OperatorHandle,
    check_coassociativity,
    classify_shift,
    co_toeplitz_apply,
    compose_apply,
    diagonal_eigenvalues,
    gram_matrix,
    is_positive_definite,
    leading_principal_minors,
    make_window,
    operator_matrix,
    verify_antilinearity,
)
from .instances import (
    DividedPower,
    FormSpec,
    ManinPlane,
    MatrixCoalgebra,
    NegativeDegree,
    WeightFamily,
    make_form,
    manin_product,
)
from .parsing import (
    parse_coalgebra,
    parse_element,
    parse_form,
    parse_scalar,
    parse_spec,
    parse_weight,
    render_element,
    render_scalar,
    render_tensor,
    render_triple,
)
from .scalars import I, ONE, ZERO, GaussianRational
from .verification import VerificationReport, run_suite

__all__ = [
    "BasisKey",
    "BasisWindow",
    "Classification",
    "Coalgebra",
    "CoassociativityReport",
    "DividedKey",
    "DividedPower",
    "Element",
    "FormSpec",
    "GaussianRational",
    "GramResult",
    "I",
    "ManinKey",
    "ManinPlane",
    "MatrixCoalgebra",
    "MatrixKey",
    "MatrixResult",
    "NegDegKey",
    "NegativeDegree",
    "ONE",
    "OperatorHandle",
    "ProjectionPair",
    "SesquilinearForm",
    "TensorElement",
    "TripleTensorElement",
    "VerificationReport",
    "WeightFamily",
    "ZERO",
    "check_coassociativity",
    "classify_shift",
    "co_toeplitz_apply",
    "compose_apply",
    "comul_extend",
    "diagonal_eigenvalues",
    "gram_matrix",
    "is_positive_definite",
    "leading_principal_minors",
    "make_form",
    "make_window",
    "manin_product",
    "operator_matrix",
    "pair_extend",
    "parse_coalgebra",
    "parse_element",
    "parse_form",
    "parse_scalar",
    "parse_spec",
    "parse_weight",
    "pi_action",
    "project",
    "render_element",
    "render_scalar",
    "render_tensor",
    "render_triple",
    "run_suite",
    "star_extend",
    "verify_antilinearity",
]

__version__ = "0.1.0"
