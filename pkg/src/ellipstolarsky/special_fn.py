"""Complete elliptic integrals, gamma/digamma and Pochhammer symbols.

``ellip_k`` and ``ellip_e`` sum the hypergeometric Maclaurin series in r^2;
``ellip_k_agm`` and ``ellip_e_agm`` are an independent route through the
arithmetic-geometric mean.  The ``*_mp`` variants run the AGM in mpmath at a
caller-chosen precision and are what the high-precision checks build on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath

from .errors import ConvergenceError, DomainError

EPS = 2.220446049250313e-16
EULER_GAMMA_STR = "0.577215664901532860606512090082"
EULER_GAMMA = float(EULER_GAMMA_STR)
HALF_PI = 0.5 * math.pi
TWO_OVER_PI = 2.0 / math.pi

# r above which the auto route switches from the series to the AGM
SERIES_CUTOFF = 0.95


@dataclass(frozen=True)
class Modulus:
    """A modulus r in [0, 1] together with its complement sqrt(1 - r^2)."""

    r: float
    r_comp: float

    @classmethod
    def from_r(cls, r: float) -> "Modulus":
        r = float(r)
        if not 0.0 <= r <= 1.0:
            raise DomainError(f"modulus r={r!r} outside [0, 1]")
        return cls(r, math.sqrt((1.0 - r) * (1.0 + r)))

    @classmethod
    def from_complement(cls, r_comp: float) -> "Modulus":
        r_comp = float(r_comp)
        if not 0.0 <= r_comp <= 1.0:
            raise DomainError(f"complement r'={r_comp!r} outside [0, 1]")
        return cls(math.sqrt((1.0 - r_comp) * (1.0 + r_comp)), r_comp)

    @property
    def log_comp(self) -> float:
        """ln r', computed without forming r' first."""
        if self.r == 1.0:
            return -math.inf
        return 0.5 * math.log1p(-self.r * self.r)


def as_modulus(m) -> Modulus:
    return m if isinstance(m, Modulus) else Modulus.from_r(m)


@dataclass(frozen=True)
class EvalOptions:
    tol: float = 1e-14
    max_terms: int = 10_000

    def __post_init__(self):
        if not self.tol >= EPS:
            raise DomainError(f"tol={self.tol!r} below machine epsilon")
        if self.max_terms < 8:
            raise DomainError("max_terms must be at least 8")


DEFAULT_OPTIONS = EvalOptions()


# -- Pochhammer ---------------------------------------------------------------

def pochhammer(a: float, n: int) -> float:
    """Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1."""
    if n < 0:
        raise DomainError("n must be non-negative")
    out = 1.0
    for k in range(n):
        out *= a + k
    return out


def pochhammer_exact(a, n: int) -> Fraction:
    """(a)_n in exact rational arithmetic; ``a`` may be int, str or Fraction."""
    if n < 0:
        raise DomainError("n must be non-negative")
    a = Fraction(a)
    out = Fraction(1)
    for k in range(n):
        out *= a + k
    return out


@lru_cache(maxsize=None)
def k_coeff(n: int) -> Fraction:
    """Coefficient of r^{2n} in (2/pi) K(r)."""
    return (pochhammer_exact(Fraction(1, 2), n) / math.factorial(n)) ** 2


@lru_cache(maxsize=None)
def e_coeff(n: int) -> Fraction:
    """Coefficient of r^{2n} in (2/pi) E(r)."""
    return (pochhammer_exact(Fraction(-1, 2), n) * pochhammer_exact(Fraction(1, 2), n)
            / math.factorial(n) ** 2)


# -- series -----------------------------------------------------------------

def _sum_series(r2: float, ratio, first: float, opts: EvalOptions) -> float:
    """Sum first + t1 + t2 + ... with t_{n+1} = t_n * ratio(n) * r2."""
    total = term = first
    tail_factor = math.inf if r2 >= 1.0 else r2 / (1.0 - r2)
    for n in range(opts.max_terms):
        term *= ratio(n) * r2
        total += term
        bound = opts.tol * abs(total)
        if abs(term) < bound and abs(term) * tail_factor < bound:
            return total
    raise ConvergenceError(f"series did not converge in {opts.max_terms} terms (r^2={r2!r})")


def _k_ratio(n: int) -> float:
    x = (n + 0.5) / (n + 1.0)
    return x * x


def _e_ratio(n: int) -> float:
    return (n - 0.5) * (n + 0.5) / ((n + 1.0) * (n + 1.0))


def ellip_k(m, opts: EvalOptions = DEFAULT_OPTIONS, method: str = "auto") -> float:
    """Complete elliptic integral of the first kind K(r).

    ``method`` is ``"series"``, ``"agm"`` or ``"auto"`` (series up to
    r = 0.95, AGM above).
    """
    m = as_modulus(m)
    if m.r == 1.0:
        raise DomainError("K(r) diverges at r = 1")
    if method == "agm" or (method == "auto" and m.r > SERIES_CUTOFF):
        return ellip_k_agm(m)
    if method not in ("auto", "series"):
        raise ValueError(f"unknown method {method!r}")
    return HALF_PI * _sum_series(m.r * m.r, _k_ratio, 1.0, opts)


def ellip_e(m, opts: EvalOptions = DEFAULT_OPTIONS, method: str = "auto") -> float:
    """Complete elliptic integral of the second kind E(r); E(1) = 1 exactly."""
    m = as_modulus(m)
    if m.r == 1.0 and method != "series":
        return 1.0
    if method == "agm" or (method == "auto" and m.r > SERIES_CUTOFF):
        return ellip_e_agm(m)
    if method not in ("auto", "series"):
        raise ValueError(f"unknown method {method!r}")
    return HALF_PI * _sum_series(m.r * m.r, _e_ratio, 1.0, opts)


def one_minus_two_over_pi_e(m, opts: EvalOptions = DEFAULT_OPTIONS) -> float:
    """1 - (2/pi) E(r) without cancellation at small r.

    For r <= 1/2 this sums the positive-term series -sum_{n>=1} e_n r^{2n}.
    """
    m = as_modulus(m)
    if m.r == 0.0:
        return 0.0
    if m.r > 0.5:
        return 1.0 - TWO_OVER_PI * ellip_e(m, opts)
    r2 = m.r * m.r
    return _sum_series(r2, lambda n: _e_ratio(n + 1), 0.25 * r2, opts)


# -- AGM ----------------------------------------------------------------------

def _agm(r: float, r_comp: float):
    a, b, c = 1.0, r_comp, r
    acc = 0.5 * c * c
    power = 0.5
    for _ in range(64):
        if abs(a - b) < 4 * EPS * a:
            return a, acc
        a_next = 0.5 * (a + b)
        c = c * c / (4.0 * a_next)
        b = math.sqrt(a * b)
        a = a_next
        power *= 2.0
        acc += power * c * c
    raise ConvergenceError("AGM iteration did not settle")


def ellip_k_agm(m) -> float:
    m = as_modulus(m)
    if m.r == 1.0:
        raise DomainError("K(r) diverges at r = 1")
    a, _ = _agm(m.r, m.r_comp)
    return HALF_PI / a


def ellip_e_agm(m) -> float:
    m = as_modulus(m)
    if m.r == 1.0:
        return 1.0
    a, acc = _agm(m.r, m.r_comp)
    return HALF_PI / a * (1.0 - acc)


def ellip_ke_mp(r, dps: int = 50):
    """(K(r), E(r)) as mpmath numbers computed by the AGM at ``dps`` digits.

    ``r`` may be a float, a string, a Fraction or an mpf; it is converted
    exactly where possible.  At r = 1 the K entry is +inf.
    """
    with mpmath.workdps(dps + 10):
        r = _to_mpf(r)
        if r < 0 or r > 1:
            raise DomainError(f"modulus r={r} outside [0, 1]")
        if r == 1:
            return mpmath.inf, mpmath.mpf(1)
        a, b, c = mpmath.mpf(1), mpmath.sqrt((1 - r) * (1 + r)), r
        acc = c * c / 2
        power = mpmath.mpf(1) / 2
        tiny = mpmath.mpf(2) ** (-mpmath.mp.prec + 4)
        while abs(a - b) > tiny * a:
            a_next = (a + b) / 2
            c = c * c / (4 * a_next)
            b = mpmath.sqrt(a * b)
            a = a_next
            power *= 2
            acc += power * c * c
        k = mpmath.pi / (2 * a)
        e = k * (1 - acc)
    with mpmath.workdps(dps):
        return +k, +e


def _to_mpf(x):
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


# -- gamma / digamma ----------------------------------------------------------

# B_{2k} / (2k (2k-1)) for k = 1..8
_STIRLING = (
    1.0 / 12, -1.0 / 360, 1.0 / 1260, -1.0 / 1680, 1.0 / 1188, -691.0 / 360360,
    1.0 / 156, -3617.0 / 122400,
)
_STIRLING_MIN = 10.0
GAMMA_MAX_ARG = 171.6


def _stirling_correction(x: float) -> float:
    inv2 = 1.0 / (x * x)
    s = 0.0
    for coef in reversed(_STIRLING):
        s = s * inv2 + coef
    return s / x


def gamma_fn(x: float) -> float:
    """Euler's gamma function for x > 0.

    Stirling's series with eight Bernoulli terms for x >= 10; smaller
    arguments are shifted up with the recurrence Gamma(x+1) = x Gamma(x).
    """
    if not x > 0:
        raise DomainError(f"gamma_fn requires x > 0, got {x!r}")
    if x > GAMMA_MAX_ARG:
        raise OverflowError(f"gamma({x!r}) exceeds the double range")
    denom = 1.0
    while x < _STIRLING_MIN:
        denom *= x
        x += 1.0
    half = x ** (0.5 * x)
    value = math.sqrt(2.0 * math.pi / x) * half * math.exp(-x) * half
    return value * math.exp(_stirling_correction(x)) / denom


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0, valid beyond the overflow point of gamma_fn."""
    if not x > 0:
        raise DomainError(f"log_gamma requires x > 0, got {x!r}")
    shift = 0.0
    while x < _STIRLING_MIN:
        shift += math.log(x)
        x += 1.0
    return ((x - 0.5) * math.log(x) - x + 0.5 * math.log(2.0 * math.pi)
            + _stirling_correction(x) - shift)


# B_{2k} / (2k) for k = 1..7
_DIGAMMA_ASYMP = (
    1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240, 1.0 / 132, -691.0 / 32760, 1.0 / 12,
)


def digamma(x: float) -> float:
    """psi(x) = Gamma'(x)/Gamma(x) for x > 0."""
    if not x > 0:
        raise DomainError(f"digamma requires x > 0, got {x!r}")
    shift = 0.0
    while x < 10.0:
        shift += 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    series = 0.0
    for coef in reversed(_DIGAMMA_ASYMP):
        series = (series + coef) * inv2
    return math.log(x) - 0.5 / x - series - shift


def arc_length_ellipse(r: float) -> float:
    """Perimeter of the ellipse with semi-axes 1 and r, i.e. 4 E(r')."""
    if not 0.0 < r < 1.0:
        raise DomainError(f"semi-axis r={r!r} must lie in (0, 1)")
    return 4.0 * ellip_e(Modulus.from_complement(r))
