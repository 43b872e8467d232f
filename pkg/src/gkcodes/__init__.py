"""Two-point AG codes on the Giulietti-Korchmaros curves.

Finite fields, the curve and its rational points, Weierstrass semigroups at
P0 and P_inf, Riemann-Roch spaces, the codes C_L and C_Omega with their
distance certificates, and a search for codes certified by the improved
two-point bound.
"""

from gkcodes.codes import (
    BoundCertificate,
    LinearCode,
    apply_matthews,
    build_CL,
    build_COmega,
    check_matthews,
    shorten,
)
from gkcodes.curve import GKCurve, classify_orbit, curve_create, enumerate_points, evaluate_monomial, pole_pair
from gkcodes.errors import GKCodesError, HypothesisFailed
from gkcodes.gf import FieldElement, GaloisField, field_create
from gkcodes.rrspace import TwoPointDivisor, basis, ell
from gkcodes.search import CodeRecord, SearchSpec, expand_by_shortening, one_point_baseline, search_matthews
from gkcodes.semigroup import (
    NumericalSemigroup,
    TwoPointSemigroup,
    gamma_brute_force,
    gamma_closed_form,
    one_point_semigroup,
)

__version__ = "0.1.0"

__all__ = [
    "BoundCertificate",
    "CodeRecord",
    "FieldElement",
    "GKCodesError",
    "GKCurve",
    "GaloisField",
    "HypothesisFailed",
    "LinearCode",
    "NumericalSemigroup",
    "SearchSpec",
    "TwoPointDivisor",
    "TwoPointSemigroup",
    "apply_matthews",
    "basis",
    "build_CL",
    "build_COmega",
    "check_matthews",
    "classify_orbit",
    "curve_create",
    "ell",
    "enumerate_points",
    "evaluate_monomial",
    "expand_by_shortening",
    "field_create",
    "gamma_brute_force",
    "gamma_closed_form",
    "one_point_baseline",
    "one_point_semigroup",
    "pole_pair",
    "search_matthews",
    "shorten",
]
