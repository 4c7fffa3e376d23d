"""hypseries: exact and arbitrary-precision tools for hyperbolic cosecant
series, Lambert series, and the polynomial families of their functional
equations."""

from .exact import (
    Rational,
    IntTriangleCache,
    binomial,
    stirling_first,
    pochhammer,
    falling_factorial,
    harmonic,
    bell_incomplete,
)
from .bernoulli import (
    RationalPolynomial,
    bernoulli_number,
    bernoulli_poly,
    bernoulli_poly_at,
    gen_bernoulli_poly,
    reduced_even,
    reduced_odd,
    gen_bernoulli_via_bell,
    gamma_ratio_poly,
)
from .coefficients import ROUTES, CoeffTable, c_table, d_table
from .polynomials import (
    PiNumber,
    PiPolynomial,
    calB,
    calA,
    ramanujan,
    gen_ramanujan,
    frak_b,
    calS,
    a_sinh_trunc,
    sigma_term_coefficient,
)
from .series_eval import (
    SeriesValue,
    eval_S,
    eval_S_cosh,
    eval_S_sinh,
    eval_S_exponential,
    eval_lambert,
    zeta_int,
    polygamma_one,
    qpolygamma_one,
    eval_pi_poly,
)
from .relations import (
    RelationReport,
    IdentityResult,
    check_funcrel_S,
    check_lambert_pos,
    check_lambert_neg,
    check_linearity,
    check_reduction,
    check_asymptotic_S,
    check_asymptotic_sinh,
    identity_suite,
)
from .zeros import ZeroSet, verify_unruh_zero, find_zeros, zeros_dataset
from .errors import (
    HypSeriesError,
    DomainError,
    PrecisionError,
    ParamError,
    ConvergenceError,
    RouteUnsupported,
    LengthMismatch,
)

__version__ = "0.1.0"
