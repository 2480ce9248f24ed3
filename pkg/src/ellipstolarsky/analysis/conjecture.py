"""Explorer for the open single-peak conjecture at p0, where theta_p0 = 2/pi."""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
import numpy as np
from scipy.optimize import brentq

from ..errors import RootError
from ..special_fn import TWO_OVER_PI, Modulus, ellip_ke_mp, one_minus_two_over_pi_e
from ..stolarsky import stolarsky_mp, theta
from .ratios import C_HALF_SUM, one_minus_s
from .scan import MonotonicityReport, open_grid, report_from_values

P0_REFERENCE = 1.763135


def _theta_gap(p: float) -> float:
    return theta(p, C_HALF_SUM) - TWO_OVER_PI


def solve_p0(xtol: float = 1e-15) -> float:
    """Root of theta(p, 9/4) = 2/pi on (0, 9/4].

    A coarse scan finds the sign change, Brent's method polishes it.
    """
    ps = np.linspace(0.05, C_HALF_SUM, 200)
    vals = [_theta_gap(float(p)) for p in ps]
    for a, b, fa, fb in zip(ps[:-1], ps[1:], vals[:-1], vals[1:]):
        if fa == 0:
            return float(a)
        if fa * fb < 0:
            root = brentq(_theta_gap, float(a), float(b), xtol=xtol, rtol=4 * np.finfo(float).eps)
            if abs(_theta_gap(root)) >= 1e-12:
                raise RootError(f"theta root residual {_theta_gap(root)!r} too large")
            return root
    raise RootError("theta(p, 9/4) - 2/pi has no sign change on (0, 9/4]")


def h_ratio(p: float, m) -> float:
    """H(r) = (1 - (2/pi) E) / (1 - S_{9/2-p,p}(1, r'))."""
    return one_minus_two_over_pi_e(m) / one_minus_s(4.5 - p, p, m)


@dataclass(frozen=True)
class ConjectureResult:
    p0: float
    rise: MonotonicityReport
    fall: MonotonicityReport
    r0_estimate: float
    single_peaked: bool
    inequality_holds: bool
    worst_margin: float
    grid: tuple
    h_values: tuple


def conjecture_scan(n: int = 2000, tol: float = 1e-12, dps: int = 40) -> ConjectureResult:
    """Scan H on the open n-point grid and test the implied inequality.

    The inequality (2/pi) E < S_{9/2-p0,p0}(1, r') is checked in mpmath at
    every grid point; its margin falls to ~1e-30 near r = 0.
    """
    if n < 100:
        raise ValueError("conjecture_scan needs n >= 100")
    p0 = solve_p0()
    rs = open_grid(n)
    hs = np.array([h_ratio(p0, Modulus.from_r(float(r))) for r in rs])
    peak = int(np.argmax(hs))
    rise = report_from_values(rs[:peak + 1], hs[:peak + 1], tol)
    fall = report_from_values(rs[peak:], hs[peak:], tol)
    single = rise.direction == "increasing" and fall.direction == "decreasing"
    worst = math.inf
    with mpmath.workdps(dps):
        mp0 = mpmath.mpf(p0)
        for r in rs:
            r = mpmath.mpf(float(r))
            _, e = ellip_ke_mp(r, dps)
            s = stolarsky_mp(mpmath.mpf(9) / 2 - mp0, mp0, 1, mpmath.sqrt((1 - r) * (1 + r)), dps)
            margin = float((s - 2 * e / mpmath.pi) / r ** 12)
            worst = min(worst, margin)
    return ConjectureResult(
        p0=p0, rise=rise, fall=fall, r0_estimate=float(rs[peak]),
        single_peaked=single, inequality_holds=worst > 0, worst_margin=worst,
        grid=tuple(float(r) for r in rs), h_values=tuple(float(h) for h in hs),
    )
