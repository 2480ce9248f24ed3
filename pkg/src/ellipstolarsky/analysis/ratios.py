"""The ratio functions whose monotonicity carries the two sharp bounds.

Numerators and denominators are both formed as "1 - something" without
cancellation: 1 - (2/pi)E from its positive series at small r and
1 - S as -expm1(ln S) from the log-space Stolarsky evaluator.  The analytic
limits are returned only at r = 0 and r = 1 exactly; everywhere in between
the ratios are evaluated directly and stay accurate to about 1e-15.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from ..errors import DomainError
from ..special_fn import DEFAULT_OPTIONS, TWO_OVER_PI, EvalOptions, as_modulus, ellip_e, ellip_e_agm, one_minus_two_over_pi_e
from ..stolarsky import log_stolarsky, theta
from .ledger import coeff_w

C_HALF_SUM = 2.25  # the family S_{9/2-p, p} is symmetric about p = 9/4

F_LIMIT_AT_ONE = 11 * (math.pi - 2) / (4 * math.pi)
G_LIMIT_AT_ONE = 25 * (math.pi - 2) / (9 * math.pi)
G1_LIMIT_AT_ZERO = 3 / (5 * 2 ** 14)
G1_LIMIT_AT_ONE = 16 / 25 - TWO_OVER_PI

# series route for G1 below this modulus; r^2 = 0.7225 needs about 120 terms
G1_SERIES_CUTOFF = 0.85
_G1_TERMS = 160


def one_minus_s(p: float, q: float, m) -> float:
    """1 - S_{p,q}(1, r') without cancellation."""
    m = as_modulus(m)
    if m.r == 0.0:
        return 0.0
    return -math.expm1(log_stolarsky(p, q, 0.0, m.log_comp))


def ratio_F(m, opts: EvalOptions = DEFAULT_OPTIONS) -> float:
    """(1 - (2/pi) E) / (1 - S_{11/4,7/4}(1, r')), decreasing from 1 to 11(pi-2)/(4 pi)."""
    m = as_modulus(m)
    if m.r == 0.0:
        return 1.0
    if m.r == 1.0:
        return F_LIMIT_AT_ONE
    return one_minus_two_over_pi_e(m, opts) / one_minus_s(2.75, 1.75, m)


def ratio_G(m, opts: EvalOptions = DEFAULT_OPTIONS) -> float:
    """(1 - (2/pi) E) / (1 - S_{5/2,2}(1, r')), increasing from 1 to 25(pi-2)/(9 pi)."""
    m = as_modulus(m)
    if m.r == 0.0:
        return 1.0
    if m.r == 1.0:
        return G_LIMIT_AT_ONE
    return one_minus_two_over_pi_e(m, opts) / one_minus_s(2.5, 2.0, m)


def r_limit_at_one(p: float) -> float:
    """Limit of R_p at r = 1: 2/(pi theta_p), infinite for p <= 0."""
    if p > C_HALF_SUM:
        raise DomainError(f"R_p is defined for p <= 9/4, got {p!r}")
    if p <= 0:
        return math.inf
    return TWO_OVER_PI / theta(p, C_HALF_SUM)


def ratio_R(p: float, m, opts: EvalOptions = DEFAULT_OPTIONS) -> float:
    """(2/pi) E(r) / S_{9/2-p, p}(1, r')."""
    if p > C_HALF_SUM:
        raise DomainError(f"R_p is defined for p <= 9/4, got {p!r}")
    m = as_modulus(m)
    if m.r == 0.0:
        return 1.0
    if m.r == 1.0:
        return r_limit_at_one(p)
    log_s = log_stolarsky(4.5 - p, p, 0.0, m.log_comp)
    return TWO_OVER_PI * ellip_e(m, opts) * math.exp(-log_s)


def diff_E_minus_S(p: float, q: float, m, opts: EvalOptions = DEFAULT_OPTIONS) -> float:
    """(2/pi) E - S_{p,q}(1, r'), formed as (1 - S) - (1 - (2/pi) E)."""
    m = as_modulus(m)
    return one_minus_s(p, q, m) - one_minus_two_over_pi_e(m, opts)


@lru_cache(maxsize=1)
def _w_floats():
    # w_n for n = 4 .. 4 + _G1_TERMS - 1; w_1..w_3 vanish
    return tuple(float(coeff_w(n)) for n in range(4, 4 + _G1_TERMS))


def ratio_G1(m, opts: EvalOptions = DEFAULT_OPTIONS) -> float:
    """(S_{5/2,2}(1, r') - (2/pi) E(r)) / r^8.

    Below r = 0.85 this sums sum_{n>=4} w_n r^{2n-8} with the exact
    coefficients; above it the difference is formed directly with E from the
    AGM, whose error is near machine precision.
    """
    m = as_modulus(m)
    if m.r == 1.0:
        return G1_LIMIT_AT_ONE
    if m.r < G1_SERIES_CUTOFF:
        r2 = m.r * m.r
        total = 0.0
        for w in reversed(_w_floats()):
            total = total * r2 + w
        return total
    one_minus_e = 1.0 - TWO_OVER_PI * ellip_e_agm(m)
    return (one_minus_e - one_minus_s(2.5, 2.0, m)) / m.r ** 8


@dataclass(frozen=True)
class BoundConstants:
    lower_best: float
    upper_best: float

    def __post_init__(self):
        if not self.lower_best < self.upper_best:
            raise ValueError("lower_best must be below upper_best")


def best_constants(which: str) -> BoundConstants:
    """Best constants of the two double inequalities in S_{11/4,7/4} and S_{5/2,2}."""
    if which == "theorem1":
        return BoundConstants(F_LIMIT_AT_ONE, 1.0)
    if which == "theorem2":
        return BoundConstants(1.0, G_LIMIT_AT_ONE)
    raise ValueError(f"unknown bound {which!r}; use 'theorem1' or 'theorem2'")


def series_ratio_G(r: float, terms: int = 200) -> float:
    """sum v_n r^{2n} / sum u_n r^{2n} truncated after ``terms`` terms."""
    from .ledger import coeff_u, coeff_v

    r2 = r * r
    num = den = 0.0
    power = 1.0
    for n in range(1, terms + 1):
        power *= r2
        num += float(coeff_v(n)) * power
        den += float(coeff_u(n)) * power
    return num / den

