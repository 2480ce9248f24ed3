"""Catalogue of approximations to (2/pi) E(r) and their error metadata.

Every approximation is a function of x = r'.  A1..A5 are lower
approximations, A6..A8 upper ones.  The signed error is always
Delta(r) = approx - (2/pi) E(r), so lower approximations have Delta <= 0.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np
from scipy.optimize import minimize_scalar

from .errors import FitError
from .special_fn import DEFAULT_OPTIONS, TWO_OVER_PI, EvalOptions, Modulus, as_modulus, ellip_e, ellip_ke_mp
from .stolarsky import log_stolarsky, power_mean

S_FAMILY_SUM = Fraction(9, 2)


class ApproxId(enum.Enum):
    A1 = 1
    A2 = 2
    A3 = 3
    A4 = 4
    A5 = 5
    A6 = 6
    A7 = 7
    A8 = 8

    @property
    def is_lower(self) -> bool:
        return self.value <= 5

    @classmethod
    def parse(cls, text: str) -> "ApproxId":
        try:
            return cls[text.strip().upper()]
        except KeyError:
            raise ValueError(f"unknown approximation {text!r}") from None


EXPRESSIONS = {
    ApproxId.A1: "A_{3/2}(1,x)",
    ApproxId.A2: "(23 A - 5 H - 2 S)/16",
    ApproxId.A3: "(9x^2 + 14x + 9)^2 / (128 (x+1)^3)",
    ApproxId.A4: "(1 + x + x^2)/(2(1+x)) + (1+x)/8",
    ApproxId.A5: "S_{11/4,7/4}(1,x)",
    ApproxId.A6: "Lehmer_{1/4}(1,x)",
    ApproxId.A7: "(18 A - 5 G + 3 S)/16",
    ApproxId.A8: "S_{5/2,2}(1,x)",
}


def _closed_form(aid: ApproxId, x, num):
    """Closed form of each approximation at x = r'.

    ``num`` turns an exact rational into the working number type, so the same
    expressions serve float and mpmath evaluation.  A5 and A8 are 0/0 at
    x = 1 and must be handled by the caller.
    """
    one = num(1)
    half = num(Fraction(1, 2))
    arith = (one + x) * half
    quad = ((one + x * x) * half) ** half
    if aid is ApproxId.A1:
        return ((one + x ** num(Fraction(3, 2))) * half) ** num(Fraction(2, 3))
    if aid is ApproxId.A2:
        harm = 2 * x / (one + x)
        return (23 * arith - 5 * harm - 2 * quad) / 16
    if aid is ApproxId.A3:
        return (9 * x * x + 14 * x + 9) ** 2 / (128 * (x + one) ** 3)
    if aid is ApproxId.A4:
        return (one + x + x * x) / (2 * (one + x)) + (one + x) / 8
    if aid is ApproxId.A5:
        return num(Fraction(7, 11)) * (one - x ** num(Fraction(11, 4))) / (one - x ** num(Fraction(7, 4)))
    if aid is ApproxId.A6:
        return (one + x ** num(Fraction(5, 4))) / (one + x ** num(Fraction(1, 4)))
    if aid is ApproxId.A7:
        return (18 * arith - 5 * x ** half + 3 * quad) / 16
    if aid is ApproxId.A8:
        return (num(Fraction(4, 5)) * (one - x ** num(Fraction(5, 2))) / (one - x * x)) ** 2
    raise ValueError(aid)


def _mp_num(v):
    v = Fraction(v)
    return mpmath.mpf(v.numerator) / v.denominator


_STOLARSKY_IDS = {
    ApproxId.A5: (2.75, 1.75),
    ApproxId.A8: (2.5, 2.0),
}


def approx_value(aid: ApproxId, m) -> float:
    """Value of approximation ``aid`` at modulus r (argument x = r')."""
    m = as_modulus(m)
    x = m.r_comp
    if m.r == 0.0:
        return 1.0
    if aid in _STOLARSKY_IDS:
        p, q = _STOLARSKY_IDS[aid]
        return math.exp(log_stolarsky(p, q, 0.0, m.log_comp))
    if aid is ApproxId.A1:
        return power_mean(1.5, (1.0, x))
    return _closed_form(aid, x, float)


def approx_value_mp(aid: ApproxId, r, dps: int = 60):
    """High-precision value of ``aid`` at modulus r (float or mpf)."""
    with mpmath.workdps(dps):
        r = mpmath.mpf(r)
        x = mpmath.sqrt((1 - r) * (1 + r))
        if x == 1:
            return mpmath.mpf(1)
        return +_closed_form(aid, x, _mp_num)


def approx_value_at_x_mp(aid: ApproxId, x, dps: int = 60):
    """High-precision value of ``aid`` as a function of its argument x > 0."""
    with mpmath.workdps(dps):
        x = mpmath.mpf(x)
        if x == 1:
            return mpmath.mpf(1)
        return +_closed_form(aid, x, _mp_num)


def s_family(p: float, m) -> float:
    """S_{9/2-p, p}(1, r')."""
    m = as_modulus(m)
    if m.r == 0.0:
        return 1.0
    return math.exp(log_stolarsky(4.5 - p, p, 0.0, m.log_comp))


def signed_error(aid: ApproxId, m, opts: EvalOptions = DEFAULT_OPTIONS) -> float:
    """Delta(r) = approx(r') - (2/pi) E(r)."""
    m = as_modulus(m)
    return approx_value(aid, m) - TWO_OVER_PI * ellip_e(m, opts)


def signed_error_mp(aid: ApproxId, r, dps: int = 60):
    with mpmath.workdps(dps):
        _, e = ellip_ke_mp(r, dps)
        return +(approx_value_mp(aid, r, dps) - 2 * e / mpmath.pi)


# -- leading-order metadata -------------------------------------------------

@dataclass(frozen=True)
class LeadingOrder:
    """Delta(r) = coefficient * r^(2 * half_order) + O(r^(2 * half_order + 2))."""

    half_order: int
    coefficient: Fraction

    @property
    def table_coefficient(self) -> Fraction:
        """The same coefficient written for (2/pi) E - approx."""
        return -self.coefficient


LEADING_ORDERS = {
    ApproxId.A1: LeadingOrder(4, Fraction(-1, 2 ** 14)),
    ApproxId.A2: LeadingOrder(6, Fraction(-3, 2 ** 20)),
    ApproxId.A3: LeadingOrder(6, Fraction(-1, 2 ** 20)),
    ApproxId.A4: LeadingOrder(4, Fraction(-263, 2 ** 16)),
    ApproxId.A5: LeadingOrder(6, Fraction(-1, 7 * 2 ** 21)),
    ApproxId.A6: LeadingOrder(4, Fraction(1, 2 ** 12)),
    ApproxId.A7: LeadingOrder(6, Fraction(7, 2 ** 20)),
    ApproxId.A8: LeadingOrder(4, Fraction(3, 5 * 2 ** 14)),
}


def leading_order(aid: ApproxId) -> LeadingOrder:
    return LEADING_ORDERS[aid]


FIT_EXPONENTS = range(3, 11)
FIT_MAX_RESIDUAL = 0.10


def fit_leading_order(aid: ApproxId, dps: int = 90):
    """Estimate (n0, eps) from Delta at r = 2^-k, k = 3..10.

    The errors are of size 2^-120 at the small end, so they are evaluated in
    mpmath.  n0 is the rounded half-slope of log|Delta| against log r; eps is
    the r -> 0 intercept of a straight-line fit of Delta / r^(2 n0) in r^2.
    """
    rs = [mpmath.mpf(2) ** -k for k in FIT_EXPONENTS]
    deltas = [signed_error_mp(aid, r, dps) for r in rs]
    if any(d == 0 for d in deltas):
        raise FitError(f"{aid.name}: vanishing error at a fit abscissa")
    log_r = np.array([float(mpmath.log(r)) for r in rs])
    log_d = np.array([float(mpmath.log(abs(d))) for d in deltas])
    slope, intercept = np.polyfit(log_r, log_d, 1)
    residual = np.max(np.abs(np.expm1(log_d - (slope * log_r + intercept))))
    if residual > FIT_MAX_RESIDUAL:
        raise FitError(f"{aid.name}: log-log residual {residual:.3g} exceeds {FIT_MAX_RESIDUAL}")
    n0 = int(round(slope / 2))
    scaled = np.array([float(d / r ** (2 * n0)) for d, r in zip(deltas, rs)])
    r2 = np.array([float(r * r) for r in rs])
    _, eps = np.polyfit(r2, scaled, 1)
    return n0, float(eps)


# -- maximum absolute error ---------------------------------------------------

def max_abs_error(aid: ApproxId, grid_n: int = 5000, opts: EvalOptions = DEFAULT_OPTIONS):
    """(max |Delta|, argmax r) over [0, 1].

    Scans a closed uniform grid including r = 1, then refines the best cell
    with a bounded scalar search.
    """
    grid = np.linspace(0.0, 1.0, grid_n)
    vals = [abs(signed_error(aid, Modulus.from_r(r), opts)) for r in grid]
    i = int(np.argmax(vals))
    best_r, best = float(grid[i]), float(vals[i])
    lo, hi = float(grid[max(i - 1, 0)]), float(grid[min(i + 1, grid_n - 1)])
    if hi > lo:
        res = minimize_scalar(lambda r: -abs(signed_error(aid, Modulus.from_r(r), opts)),
                              bounds=(lo, hi), method="bounded",
                              options={"xatol": 1e-12})
        if -res.fun > best:
            best_r, best = float(res.x), float(-res.fun)
    return best, best_r
