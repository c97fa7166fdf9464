"""opercalc: exact calculators and brute-force verifiers for HN polygons,
oper numerics, Frobenius pushforward slope bounds and filtration
optimization.  All arithmetic is exact rational; no floats anywhere.
"""

from .core import (
    BundleNumerics,
    CurveParams,
    HNPolygon,
    PosetDescription,
    format_rational,
    polygon_from_quotient_data,
    rational_from_json,
    rational_to_json,
    shatz_leq,
    strata_poset,
)
from .enumeration import (
    MaximalityReport,
    enumerate_admissible,
    enumerate_admissible_slow,
    key_inequality_check,
    verify_oper_maximality,
    verify_target_inequalities,
)
from .filtrations import (
    FiltrationProfile,
    max_score_brute_force,
    max_score_closed_form,
    oper_subbundle_slope_bound,
    profile_score,
    rearrangement_check,
    sun_bound,
    worst_case_subbundle_slope_bound,
)
from .frobenius import (
    DestabilizationPredicates,
    ExpectedDimensions,
    MaxDegreeCertificate,
    QuotCertificate,
    QuotProblem,
    destabilization_predicates,
    expected_dimensions,
    hirschowitz_bound,
    maxdegree_certificate,
    pushforward_numerics,
    quot_dim_lower_bound,
    quot_nonempty,
)
from .opers import (
    OperShape,
    dormant_sum_identity,
    frobenius_oper_consistency,
    oper_polygon,
    oper_quotient_degrees,
    oper_space_dimensions,
    threshold_C,
)

__all__ = [name for name in dir() if not name.startswith("_")]
