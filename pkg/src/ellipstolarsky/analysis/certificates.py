"""Polynomial and closed-form certificates used by the monotonicity proofs.

The integer polynomials g3, g4, g6 and h4 are evaluated exactly (Python
ints never overflow, so integer arguments give exact results of any width).
g2 and g5 mix in logarithms, pi and Gamma(7/8) and are floats.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath

from ..errors import DomainError, RootError
from ..special_fn import EULER_GAMMA, ellip_ke_mp, gamma_fn
from .ledger import coeff_d

# coefficients, highest degree first
G3 = (896, 7346, 41033, -3438, -149813, -227064, -40824, 864)
G4 = (512, 15474, 153661, 638728, 482131, -2496996, -3787398, -2184000, -341712)
G6 = (6422528, 40606208, -29604936, -195118044, -8157468886, -54727744833,
      -28074816632, -33746602635, -132036870576, -76358742474, -16962249960,
      -1692953136, -86111424)
H4 = (3703, 14124, -16260, -98560, -23040, 98304, -32768)
# h4(v + 2) as printed with the crossing argument
H4_SHIFTED = (3703, 58560, 347160, 928800, 1014000, 144000, -288000)

G6_AT_7 = 56640373211408308
V1_BRACKET = (Fraction(399475162, 10 ** 9), Fraction(399475163, 10 ** 9))


def poly_eval(coeffs, x):
    """Horner evaluation; exact for int or Fraction x."""
    acc = 0
    for c in coeffs:
        acc = acc * x + c
    return acc


def poly_shift(coeffs, s):
    """Coefficients of p(t + s), highest degree first (exact)."""
    out = [0]
    for c in coeffs:
        # out <- out * (t + s) + c
        nxt = out + [0]
        for i in range(len(out)):
            nxt[i + 1] += s * out[i]
        nxt[-1] += c
        out = nxt
    return tuple(out[1:])


def _exact(x):
    if isinstance(x, (int, Fraction)):
        return x
    if isinstance(x, float) and x.is_integer():
        return int(x)
    return Fraction(x)


def _ln(x) -> float:
    # math.log accepts arbitrarily large ints; Fractions go via num/den
    if isinstance(x, Fraction):
        return math.log(x.numerator) - math.log(x.denominator)
    return math.log(x)


def eval_g3456(which: int, x):
    """g3, g4, g6 exactly at a rational x; g5 as a float.

    g5(x) = ln(g4(x)/(2x+1)) - ln(7 g3(x)/x^{7/8}).
    """
    if which in (3, 4, 6):
        return poly_eval({3: G3, 4: G4, 6: G6}[which], _exact(x))
    if which == 5:
        x = _exact(x)
        g3, g4 = poly_eval(G3, x), poly_eval(G4, x)
        if not (x > 0 and g3 > 0 and g4 > 0):
            raise DomainError(f"g5 needs x > 0 with g3, g4 > 0; got x={x}")
        return _ln(g4) - _ln(2 * x + 1) - math.log(7) - _ln(g3) + 0.875 * _ln(x)
    raise ValueError(f"which must be 3, 4, 5 or 6, got {which!r}")


def _quartic(x):
    return x ** 3 + 7 * x ** 2 - 12 * x + 24


def eval_g2(x: float) -> float:
    """The lower-bound function g2 of the D_n argument."""
    if not x >= 1:
        raise DomainError(f"g2 is used for x >= 1, got {x!r}")
    q = (x + 1) * _quartic(x)
    return (math.log(x + 0.5) + EULER_GAMMA
            - x * (11 * x * x + 8 * x + 21) / q
            + 7 / 32 * x ** 0.125 * (x + 4) * (2 * x + 1) * (64 * x - 9) / q
            - 3 * math.pi / (128 * gamma_fn(0.875)) * (64 * x - 9) * (x + 2) * (x + 3) * (x + 4) / q)


def g2_at_10_closed() -> float:
    """g2(10) from its printed closed expression (independent of eval_g2)."""
    return (EULER_GAMMA + math.log(10.5)
            - 516789 / 282304 * math.pi / gamma_fn(0.875)
            + 649299 / 282304 * 10 ** 0.125 - 6005 / 8822)


def g_lower_bound(n: int) -> float:
    """Right-hand side of g(n) > (128/(7pi)) n^{7/8}/(64n-9) * Q(n)/((n+2)(n+3)(n+4)) g2(n)."""
    return (128 / (7 * math.pi) * n ** 0.875 / (64 * n - 9)
            * _quartic(n) / ((n + 2) * (n + 3) * (n + 4)) * eval_g2(n))


# -- h4 root and the A7/A8 crossing ---------------------------------------------

def h4_root(iterations: int = 80):
    """Bisect h4(v + 2) on (0, 1) in exact arithmetic.

    Returns (lo, hi) Fractions bracketing the unique positive root v1.
    """
    f = lambda v: poly_eval(H4_SHIFTED, v)
    lo, hi = Fraction(0), Fraction(1)
    if not (f(lo) < 0 < f(hi)):
        raise RootError("h4(v+2) has no sign change on (0, 1)")
    for _ in range(iterations):
        mid = (lo + hi) / 2
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
    return lo, hi


def crossing_from_v1(v1: float):
    """(x1, x0, r0) with x1 + 1/x1 = 2 + v1, x0 = x1^2 and r0 = sqrt(1 - x0^2)."""
    x1 = (v1 + 2 - math.sqrt(v1 * (v1 + 4))) / 2
    x0 = x1 * x1
    return x1, x0, math.sqrt((1 - x0) * (1 + x0))


# -- f7 ---------------------------------------------------------------------------

def f7_mp(r, dps: int = 60):
    """f7 = f5 - r'^{-7/4} f6 from the closed forms in K and E."""
    with mpmath.workdps(dps):
        r = mpmath.mpf(r)
        k, e = ellip_ke_mp(r, dps)
        r2 = r * r
        r4 = r2 * r2
        f5 = 32 * k - 32 * e - 14 * r2 * k - 3 * r4 * k - 2 * r2 * e
        f6 = (128 * k - 128 * e - 224 * r2 * k + 93 * r4 * k + 160 * r2 * e - 21 * r4 * e) / 4
        comp = (1 - r) * (1 + r)
        return +(f5 - comp ** mpmath.mpf(-0.875) * f6)


def f7_series(r, terms: int = 400, dps: int = 60):
    """(3 pi/16) r^6 sum d_n r^{2n}, truncated."""
    with mpmath.workdps(dps):
        r = mpmath.mpf(r)
        r2 = r * r
        total = mpmath.mpf(0)
        power = mpmath.mpf(1)
        for n in range(terms):
            d = coeff_d(n)
            total += mpmath.mpf(d.numerator) / d.denominator * power
            power *= r2
        return +(3 * mpmath.pi / 16 * r2 ** 3 * total)


def f7_bound(r, dps: int = 60):
    """(105 pi / 2^16) r^14 / (8 - 7 r^2)."""
    with mpmath.workdps(dps):
        r = mpmath.mpf(r)
        return +(105 * mpmath.pi / 2 ** 16 * r ** 14 / (8 - 7 * r * r))


def f7_lower_bound_check(m) -> bool:
    """f7(r) > (105 pi / 2^16) r^14/(8 - 7 r^2) at the modulus r.

    f7 loses about 14 log10(1/r) digits to cancellation, so the working
    precision grows with 1/r.
    """
    r = m.r if hasattr(m, "r") else float(m)
    if not 0 < r < 1:
        raise DomainError(f"f7 check needs r in (0, 1), got {r!r}")
    dps = 40 + int(16 * max(0.0, -math.log10(r)))
    return bool(f7_mp(r, dps) > f7_bound(r, dps))
