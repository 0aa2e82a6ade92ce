from pontcalc.core.linalg import (
    IntMatrix,
    Membership,
    hermite_rows,
    invariant_factors,
    lattice_membership,
    quotient_structure,
    rational_membership,
    rational_rank,
)
from pontcalc.core.polynomial import (
    GradedPolynomial,
    VarSet,
    elementary_symmetric,
    format_monomial,
    monomials_of_weight,
    parse_polynomial,
    series_inverse_truncated,
)

poly_add = GradedPolynomial.__add__
poly_mul = GradedPolynomial.__mul__
