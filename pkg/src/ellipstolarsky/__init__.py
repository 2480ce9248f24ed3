"""Complete elliptic integrals, Stolarsky means and sharp mean bounds for E."""

from .approximations import (
    ApproxId, LeadingOrder, approx_value, fit_leading_order, leading_order, max_abs_error,
    s_family, signed_error,
)
from .errors import ConvergenceError, DomainError, FitError, RootError
from .special_fn import (
    EvalOptions, Modulus, arc_length_ellipse, digamma, ellip_e, ellip_e_agm, ellip_k, ellip_k_agm,
    gamma_fn, log_gamma, pochhammer,
)
from .stolarsky import MeanParams, PositivePair, stolarsky, theta, toader_mean

__version__ = "0.1.0"
