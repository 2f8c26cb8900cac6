"""Exact power sums and hyper-sums of arithmetic progressions, many ways."""

from .rational import Rational, SumQuery, binomial, format_rational, parse_rational, pochhammer, ratpow
from .series import (
    BivariateSeries,
    LaurentSeries,
    NonzeroConstantTerm,
    TruncatedSeries,
    ZeroConstantTerm,
    bivariate_expand,
    exp_series,
    gauss_2f1_terminating,
    invert,
    laurent_from_quotient,
)
from .special import (
    IndexOutOfRange,
    NonIntegerResult,
    WeightedStirlingTable,
    r_stirling2,
    stirling2,
    weighted_stirling,
    weighted_stirling_explicit,
    whitney,
)
from .bernoulli import (
    BernoulliPoly,
    bernoulli_poly,
    bernoulli_via_stirling,
    evaluate,
    gen_bernoulli,
    generalized_bernoulli_poly,
)
from .powersum import (
    NotApplicable,
    powersum_bernoulli_diff,
    powersum_bernoulli_sum,
    powersum_direct,
    powersum_egf,
    powersum_rstirling,
    powersum_stirling,
    powersum_whitney,
)
from .hypersum import (
    IdentityReport,
    PrincipalPartResidue,
    hypersum_binomial,
    hypersum_doublegf_check,
    hypersum_egf_direct,
    hypersum_egf_hypergeom,
    hypersum_egf_laurent,
    hypersum_genbernoulli,
    hypersum_ogf_check,
    hypersum_recursive,
)

__version__ = "0.1.0"
