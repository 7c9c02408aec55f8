"""curveform: an exact noncommutative rewriting kernel for the Hopf algebra
of the nodal cubic, with a verification suite for its structural claims."""

from .scalar import (CurvePoint, Rational, Scalar, curve_point_from_t,
                     curve_point_validate)
from .freealg import ALPHABET, NcPoly, TensorPoly
from .parser import parse_expr
from .rewrite import (Ambiguity, OrientationPolicy, Rule, RuleSystem,
                      check_diamond, complete)
from .nodal import (NodalAlgebra, b_decompose, basis_census, basis_index,
                    build_algebra, freeness_check, growth, is_basis_word)
from .hopf import (StructureMaps, apply_antipode, apply_counit, apply_delta,
                   check_alt_presentation, check_coideal, check_hopf_axioms,
                   check_identities, check_welldefined, units_bounded_check,
                   units_suite)
from .galois import (CPoly, coaction, membership_bplus_a, project_pi,
                     recovery_check, witness_check)

__version__ = "0.1.0"

__all__ = [
    "ALPHABET", "Ambiguity", "CPoly", "CurvePoint", "NcPoly", "NodalAlgebra",
    "OrientationPolicy", "Rational", "Rule", "RuleSystem", "Scalar",
    "StructureMaps", "TensorPoly", "apply_antipode", "apply_counit",
    "apply_delta", "b_decompose", "basis_census", "basis_index",
    "build_algebra", "check_alt_presentation", "check_coideal",
    "check_diamond", "check_hopf_axioms", "check_identities",
    "check_welldefined", "coaction", "complete", "curve_point_from_t",
    "curve_point_validate", "freeness_check", "growth", "is_basis_word",
    "membership_bplus_a", "parse_expr", "project_pi", "recovery_check",
    "units_bounded_check", "units_suite", "witness_check",
]
