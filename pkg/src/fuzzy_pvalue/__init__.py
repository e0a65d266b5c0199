"""Fuzzy membership functions from exact unconditional p-values.

The p-value for a difference of two binomial proportions, viewed as a
function of the hypothesized difference, is a membership function whose
strong alpha-cuts are confidence sets and whose restricted heights are
p-values of composite hypotheses.
"""

from .binom import BinomParams, log_pmf, pmf_vector
from .fuzzy import AlphaCut, MembershipCurve, height, included_in, strong_cut
from .inference import (
    BergerBoosConfig,
    ExtendedPValue,
    HypothesisSet,
    Preference,
    bb_extended_pvalue,
    confidence_cut,
    extended_pvalue,
    mu_at,
    mu_bb_at,
    mu_curve,
    prefer_test,
    wald_set,
)
from .nuisance import EmptyNuisanceSet, NuisanceSet, SupConfig, SupResult, sup_tail
from .tail import RejectionSet, TwoSampleData, joint_tail, omega_range, scaled_score
from .validity import (
    ValidityReport,
    coverage_probability,
    enumerate_pvalues,
    validity_excess,
    verify,
)

__version__ = "0.1.0"
