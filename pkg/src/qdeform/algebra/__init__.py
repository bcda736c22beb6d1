"""The exact algebra engine: scalars, data, rewriting, Hopf structure, deformations and doubles."""

from .report import CheckEntry, CheckReport, QDeformError, ValidationReport
from .scalars import (Scalar, ScalarField, cyclotomic_field, field_ops, gauss_binomial, rational_field,
                      rational_function_field, specialize)
from .abgroup import Character, GroupSpec, char_eval, group_op
from .yd import LinkingParameters, Letter, ValidationError, YDDatum, braiding_matrix, twist_datum, validate
from .freealg import NcPoly, deglex_cmp, nc_mul
from .groebner import Presentation, RewriteRule, complete, normal_words, orient, reduce
from .braided import (BraidedTensorElement, braided_commutator, braided_coproduct, braided_mul_t2,
                      find_primitives, is_primitive, serre_element)
from .bosonize import HopfPresentation, TensorElement, antipode, check_hopf_axioms, coproduct, counit
from .deform import (CocycleTable, DeformedPresentation, Section, build_deformation, comodule_check,
                     conv_inverse, deformed_product, extract_cocycle, graded_dims)
from .double import (DoublePresentation, SkewPairing, build_double, cocycle_from_pairing, eval_pairing,
                     quotient_central, verify_double_iso)

__all__ = [
    "CheckEntry", "CheckReport", "QDeformError", "ValidationReport",
    "Scalar", "ScalarField", "cyclotomic_field", "field_ops", "gauss_binomial", "rational_field",
    "rational_function_field", "specialize",
    "Character", "GroupSpec", "char_eval", "group_op",
    "LinkingParameters", "Letter", "ValidationError", "YDDatum", "braiding_matrix", "twist_datum", "validate",
    "NcPoly", "deglex_cmp", "nc_mul",
    "Presentation", "RewriteRule", "complete", "normal_words", "orient", "reduce",
    "BraidedTensorElement", "braided_commutator", "braided_coproduct", "braided_mul_t2",
    "find_primitives", "is_primitive", "serre_element",
    "HopfPresentation", "TensorElement", "antipode", "check_hopf_axioms", "coproduct", "counit",
    "CocycleTable", "DeformedPresentation", "Section", "build_deformation", "comodule_check",
    "conv_inverse", "deformed_product", "extract_cocycle", "graded_dims",
    "DoublePresentation", "SkewPairing", "build_double", "cocycle_from_pairing", "eval_pairing",
    "quotient_central", "verify_double_iso",
]
