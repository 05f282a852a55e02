from fractions import Fraction as Rational

from .cyclotomic import (Cyclotomic, CyclotomicField, FieldMismatchError,
                         cyclotomic_polynomial, field_inverse, parse_scalar)
from .curves import (ConicResult, LinearSystem, condition_rows, conic_through_five,
                     curve_system, evaluate_form, monomials)
from .linalg import Echelon, nullspace, rank
from .projective import (DegenerateInputError, ProjLine, ProjPoint, apply_matrix,
                         collinear, cross, det3, incident, join, join_meet, meet,
                         projective_key)

__all__ = [
    "Rational", "Cyclotomic", "CyclotomicField", "FieldMismatchError",
    "cyclotomic_polynomial", "field_inverse", "parse_scalar",
    "ConicResult", "LinearSystem", "condition_rows", "conic_through_five",
    "curve_system", "evaluate_form", "monomials",
    "Echelon", "nullspace", "rank",
    "DegenerateInputError", "ProjLine", "ProjPoint", "apply_matrix", "collinear",
    "cross", "det3", "incident", "join", "join_meet", "meet", "projective_key",
]
