"""Stolarsky (extended) means and the classical means they contain.

The float evaluator works with logarithms throughout.  Writing
d = ln a - ln b and h(z) = ln(sinh z / z), every branch collapses to

    ln S_{p,q}(a,b) = (ln a + ln b)/2 + [h(p d/2) - h(q d/2)] / (p - q)

with the p = q branch as the derivative limit (d/2) h'(p d/2).  h is even
and O(z^2), so the form stays accurate when a and b are close.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import DomainError
from .special_fn import TWO_OVER_PI, Modulus, ellip_e

PARAM_ZERO_TOL = 1e-9
PARAM_EQUAL_TOL = 1e-6

# Maclaurin coefficients of ln(sinh z / z) (powers z^2, z^4, ...)
_H_COEFFS = tuple(float(Fraction(n, d)) for n, d in (
    (1, 6), (-1, 180), (1, 2835), (-1, 37800), (1, 467775), (-691, 3831077250),
    (2, 127702575), (-3617, 2605132530000), (43867, 350813659321125),
    (-174611, 15313294652906250), (155366, 147926426347074375),
    (-236364091, 2423034863565078262500),
))
# Maclaurin coefficients of coth z - 1/z (powers z, z^3, ...)
_DH_COEFFS = tuple(float(Fraction(n, d)) for n, d in (
    (1, 3), (-1, 45), (2, 945), (-1, 4725), (2, 93555), (-1382, 638512875),
    (4, 18243225), (-3617, 162820783125), (87734, 38979295480125),
    (-349222, 1531329465290625), (310732, 13447856940643125),
    (-472728182, 201919571963756521875),
))
_SERIES_RADIUS = 0.5
_LARGE_Z = 20.0


@dataclass(frozen=True)
class MeanParams:
    p: float
    q: float

    @property
    def branch(self) -> str:
        """One of 'generic', 'p_zero', 'q_zero', 'equal', 'both_zero'."""
        p, q = self.p, self.q
        if abs(p - q) < PARAM_EQUAL_TOL * (1 + abs(p) + abs(q)):
            return "both_zero" if max(abs(p), abs(q)) < PARAM_ZERO_TOL else "equal"
        if abs(p) < PARAM_ZERO_TOL:
            return "p_zero"
        if abs(q) < PARAM_ZERO_TOL:
            return "q_zero"
        return "generic"


@dataclass(frozen=True)
class PositivePair:
    a: float
    b: float

    def __post_init__(self):
        if not (self.a > 0 and self.b > 0):
            raise DomainError(f"mean arguments must be positive, got ({self.a!r}, {self.b!r})")


def _h(z: float) -> float:
    z = abs(z)
    if z < _SERIES_RADIUS:
        z2 = z * z
        s = 0.0
        for c in reversed(_H_COEFFS):
            s = s * z2 + c
        return s * z2
    if z > _LARGE_Z:
        return z - math.log(2.0 * z) + math.log1p(-math.exp(-2.0 * z))
    return math.log(math.sinh(z) / z)


def _dh(z: float) -> float:
    az = abs(z)
    if az < _SERIES_RADIUS:
        z2 = z * z
        s = 0.0
        for c in reversed(_DH_COEFFS):
            s = s * z2 + c
        return s * z
    return 1.0 / math.tanh(z) - 1.0 / z


def log_stolarsky(p: float, q: float, ln_a: float, ln_b: float) -> float:
    """ln S_{p,q}(a, b) from ln a and ln b (either may be -inf for a zero entry)."""
    params = MeanParams(p, q)
    branch = params.branch
    if math.isinf(ln_a) or math.isinf(ln_b):
        return _log_stolarsky_zero(params, max(ln_a, ln_b))
    if branch == "p_zero":
        p = 0.0
    elif branch == "q_zero":
        q = 0.0
    d = ln_a - ln_b
    centre = 0.5 * (ln_a + ln_b)
    if branch in ("equal", "both_zero"):
        mid = 0.0 if branch == "both_zero" else 0.5 * (p + q)
        return centre + 0.5 * d * _dh(0.5 * mid * d) if mid else centre
    return centre + (_h(0.5 * p * d) - _h(0.5 * q * d)) / (p - q)


def _log_stolarsky_zero(params: MeanParams, ln_big: float) -> float:
    # continuous extension with 0^s = 0 for s > 0
    p, q = params.p, params.q
    if math.isinf(ln_big) or min(p, q) <= 0:
        return -math.inf
    if params.branch == "equal":
        return ln_big - 2.0 / (p + q)
    return ln_big + (math.log(q) - math.log(p)) / (p - q)


def _pair(pair):
    if isinstance(pair, PositivePair):
        return pair.a, pair.b
    a, b = pair
    if a < 0 or b < 0 or (a == 0 and b == 0):
        raise DomainError(f"mean arguments must be non-negative, got ({a!r}, {b!r})")
    return float(a), float(b)


def _params(params):
    if isinstance(params, MeanParams):
        return params.p, params.q
    p, q = params
    return float(p), float(q)


def _ln(x: float) -> float:
    return math.log(x) if x > 0 else -math.inf


def stolarsky(params, pair) -> float:
    """S_{p,q}(a, b) for any real p, q.

    ``params`` is a MeanParams or (p, q); ``pair`` a PositivePair or (a, b).
    A zero entry is allowed and treated as the continuous extension.
    """
    p, q = _params(params)
    a, b = _pair(pair)
    if a == b:
        return a
    lo, hi = min(a, b), max(a, b)
    value = math.exp(log_stolarsky(p, q, _ln(a), _ln(b)))
    return min(max(value, lo), hi)


def stolarsky_mp(p, q, a, b, dps: int = 50):
    """S_{p,q}(a, b) from the textbook branch formulas, in mpmath.

    Independent of the log-space float evaluator; used as its oracle and by
    the high-precision inequality checks.  Branches are exact (p == q etc.).
    """
    with mpmath.workdps(dps):
        p, q, a, b = (_mpf(v) for v in (p, q, a, b))
        if a == b:
            return a
        if p < q:
            p, q = q, p
        if b == 0 or a == 0:
            big = max(a, b)
            if q <= 0:
                return mpmath.mpf(0)
            if p == q:
                return big * mpmath.exp(-1 / p)
            return big * (q / p) ** (1 / (p - q))
        la, lb = mpmath.log(a), mpmath.log(b)
        if p == 0 and q == 0:
            return mpmath.sqrt(a * b)
        if p == q:
            ap, bp = a ** p, b ** p
            return mpmath.exp((ap * la - bp * lb) / (ap - bp) - 1 / p)
        if q == 0:
            return ((a ** p - b ** p) / (p * (la - lb))) ** (1 / p)
        if p == 0:
            return ((a ** q - b ** q) / (q * (la - lb))) ** (1 / q)
        return (q * (a ** p - b ** p) / (p * (a ** q - b ** q))) ** (1 / (p - q))


def _mpf(v):
    if isinstance(v, Fraction):
        return mpmath.mpf(v.numerator) / v.denominator
    return mpmath.mpf(v)


# -- classical means ---------------------------------------------------------
#
# Each accepts floats or mpmath numbers; if either argument is an mpf the
# whole evaluation runs in mpmath (pass exponents as Fraction to keep them
# exact).

def _backend(*xs):
    if any(isinstance(x, mpmath.mpf) for x in xs):
        return mpmath, _mpf
    return math, float


def _geo(a, b, lib):
    return lib.sqrt(a * b)


def power_mean(p, pair):
    """A_p(a, b) = ((a^p + b^p)/2)^{1/p}, A_0 = sqrt(ab)."""
    a, b = pair if not isinstance(pair, PositivePair) else (pair.a, pair.b)
    lib, num = _backend(a, b)
    if a == b:
        return a
    if p == 0:
        return _geo(a, b, lib)
    p = num(p)
    if p < 0 and (a == 0 or b == 0):
        return num(0)
    return ((a ** p + b ** p) / 2) ** (1 / p)


def lehmer_mean(p, pair):
    """Lehmer mean (a^{p+1} + b^{p+1}) / (a^p + b^p)."""
    a, b = pair if not isinstance(pair, PositivePair) else (pair.a, pair.b)
    _, num = _backend(a, b)
    if a == b:
        return a
    p = num(p)
    return (a ** (p + 1) + b ** (p + 1)) / (a ** p + b ** p)


def heronian_order(p, pair):
    """He_p(a, b) = He(a^p, b^p)^{1/p} with He(x, y) = (x + sqrt(xy) + y)/3."""
    a, b = pair if not isinstance(pair, PositivePair) else (pair.a, pair.b)
    lib, num = _backend(a, b)
    if a == b:
        return a
    if p == 0:
        return _geo(a, b, lib)
    p = num(p)
    x, y = a ** p, b ** p
    return ((x + lib.sqrt(x * y) + y) / 3) ** (1 / p)


def log_order(p, pair):
    """L_p(a, b) = L(a^p, b^p)^{1/p} with L the logarithmic mean."""
    a, b = pair if not isinstance(pair, PositivePair) else (pair.a, pair.b)
    lib, num = _backend(a, b)
    if a == b:
        return a
    if p == 0:
        return _geo(a, b, lib)
    p = num(p)
    if a == 0 or b == 0:
        return num(0)
    x, y = a ** p, b ** p
    return ((x - y) / (p * (lib.log(a) - lib.log(b)))) ** (1 / p)


def identric_order(p, pair):
    """I_p(a, b) = I(a^p, b^p)^{1/p} with I the identric mean."""
    a, b = pair if not isinstance(pair, PositivePair) else (pair.a, pair.b)
    lib, num = _backend(a, b)
    if a == b:
        return a
    if p == 0:
        return _geo(a, b, lib)
    p = num(p)
    if a == 0 or b == 0:
        big = max(a, b)
        return big * lib.exp(-1 / p) if p > 0 else num(0)
    x, y = a ** p, b ** p
    la, lb = lib.log(a), lib.log(b)
    return lib.exp((x * la - y * lb) / (x - y) - 1 / p)


def theta(p: float, c: float) -> float:
    """theta_p = ((2c - p)/p)^{1/(2p - 2c)} for p in (0, 2c); theta_c = e^{-1/c}."""
    if not c > 0:
        raise DomainError(f"theta requires c > 0, got {c!r}")
    if not 0 < p < 2 * c:
        raise DomainError(f"theta requires p in (0, {2 * c!r}), got {p!r}")
    h = p - c
    x = h / c
    if abs(x) < PARAM_EQUAL_TOL:
        # atanh(x)/x = 1 + x^2/3 + x^4/5
        return math.exp(-(1.0 + x * x / 3.0) / c)
    return math.exp(-math.atanh(x) / h)


def toader_mean(pair) -> float:
    """T(a, b) = (2/pi) int_0^{pi/2} sqrt(a^2 cos^2 t + b^2 sin^2 t) dt."""
    a, b = _pair(pair)
    if a == b:
        return a
    lo, hi = min(a, b), max(a, b)
    return TWO_OVER_PI * hi * ellip_e(Modulus.from_complement(lo / hi))
