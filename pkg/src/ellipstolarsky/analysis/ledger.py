"""Exact rational coefficient sequences behind the two monotonicity proofs.

All sequences are ``fractions.Fraction`` (always in lowest terms with a
positive denominator).  Only ``seq_g`` involves pi and Gamma(7/8) and is a
float.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from ..errors import DomainError
from ..special_fn import gamma_fn, pochhammer_exact

RationalCoeff = Fraction

HALF = Fraction(1, 2)
SEVEN_EIGHTHS = Fraction(7, 8)

# d_4 .. d_10 as printed with the proof
D_TABLE = (
    Fraction(35, 32768),
    Fraction(903, 262144),
    Fraction(7343, 1048576),
    Fraction(193225, 16777216),
    Fraction(36001035, 2147483648),
    Fraction(387471275, 17179869184),
    Fraction(7897834945, 274877906944),
)
# (v_{n+1}/v_n) u_n - u_{n+1} for n = 1 .. 11
GAP_TABLE = (
    Fraction(0),
    Fraction(0),
    Fraction(3, 81920),
    Fraction(21, 512000),
    Fraction(47, 1310720),
    Fraction(1881, 64225280),
    Fraction(157531, 6710886400),
    Fraction(42559, 2264924160),
    Fraction(507577, 33554432000),
    Fraction(997177, 81201725440),
    Fraction(20743573, 2061584302080),
)


def _check_n(n: int, smallest: int):
    if n < smallest:
        raise DomainError(f"index n={n} below {smallest}")


@lru_cache(maxsize=None)
def coeff_a(n: int) -> Fraction:
    _check_n(n, 0)
    return ((5 * n + 9) * pochhammer_exact(HALF, n + 1) ** 2
            / (math.factorial(n) * math.factorial(n + 3)))


@lru_cache(maxsize=None)
def coeff_b(n: int) -> Fraction:
    """Coefficient of r^{2n} in (1 - r^2)^{-7/8}."""
    _check_n(n, 0)
    return pochhammer_exact(SEVEN_EIGHTHS, n) / math.factorial(n)


@lru_cache(maxsize=None)
def coeff_c(n: int) -> Fraction:
    _check_n(n, 0)
    return ((n - 1) * (n + 18) * (2 * n + 1) * pochhammer_exact(HALF, n) ** 2
            / (math.factorial(n) * math.factorial(n + 3)))


@lru_cache(maxsize=None)
def coeff_d(n: int) -> Fraction:
    """d_n = 8 a_n + sum_{k=0}^{n} b_{n-k} c_k."""
    _check_n(n, 0)
    return 8 * coeff_a(n) + sum((coeff_b(n - k) * coeff_c(k) for k in range(n + 1)), Fraction(0))


def seq_D(n: int) -> Fraction:
    """D_n = (8/7) d_{n+1} - d_n."""
    _check_n(n, 4)
    return Fraction(8, 7) * coeff_d(n + 1) - coeff_d(n)


def harmonic(n: int) -> Fraction:
    return sum((Fraction(1, k) for k in range(1, n + 1)), Fraction(0))


def seq_g1(n: int, method: str = "sum") -> Fraction:
    """g1(n) = sum_{k=2}^{n} (n-k)/(n-k+1) * (k-1)(k+18)/((k+1)(k+2)(k+3)).

    ``method="closed"`` uses the harmonic-number closed form instead of the
    direct sum; both are exact.
    """
    _check_n(n, 2)
    if method == "sum":
        return sum((Fraction(n - k, n - k + 1) * Fraction((k - 1) * (k + 18), (k + 1) * (k + 2) * (k + 3))
                    for k in range(2, n + 1)), Fraction(0))
    if method == "closed":
        lead = Fraction(n ** 3 + 7 * n ** 2 - 12 * n + 24, (n + 2) * (n + 3) * (n + 4))
        tail = Fraction(n * (11 * n ** 2 + 8 * n + 21), (n + 1) * (n + 2) * (n + 3) * (n + 4))
        return lead * harmonic(n) - tail
    raise ValueError(f"unknown method {method!r}")


def seq_g(n: int) -> float:
    """The float lower bound g(n) for D_n."""
    _check_n(n, 4)
    n7 = n ** 0.875
    return (4 / math.pi * n * (2 * n + 1) / ((n + 1) * (n + 2) * (n + 3))
            - 3 / (7 * gamma_fn(0.875)) * n7 / (n + 1)
            + 128 / (7 * math.pi) * n7 / (64 * n - 9) * float(seq_g1(n)))


# -- v_n, u_n, w_n (second monotonicity proof) ---------------------------------

@lru_cache(maxsize=None)
def coeff_v(n: int) -> Fraction:
    """Coefficient of r^{2n} in 1 - (2/pi) E(r)."""
    _check_n(n, 1)
    return (HALF / math.factorial(n) ** 2
            * pochhammer_exact(HALF, n - 1) * pochhammer_exact(HALF, n))


@lru_cache(maxsize=None)
def coeff_u(n: int) -> Fraction:
    """Coefficient of r^{2n} in 1 - S_{5/2,2}(1, r')."""
    _check_n(n, 1)
    f = math.factorial(n + 2)
    return (Fraction(6, 5) * pochhammer_exact(HALF, n - 1) / f
            + Fraction(2, 5) * pochhammer_exact(Fraction(3, 4), n) / f)


def coeff_u_binomial(n: int) -> Fraction:
    """u_n from the unsimplified binomial-series form (independent check)."""
    _check_n(n, 1)
    return (Fraction(16, 25) * (2 * pochhammer_exact(Fraction(-5, 4), n + 2)
                                - pochhammer_exact(Fraction(-5, 2), n + 2))
            / math.factorial(n + 2))


def coeff_w(n: int) -> Fraction:
    return coeff_v(n) - coeff_u(n)


def v_ratio(n: int) -> Fraction:
    """v_{n+1} / v_n."""
    return coeff_v(n + 1) / coeff_v(n)


def theorem2_gap(n: int) -> Fraction:
    """(v_{n+1}/v_n) u_n - u_{n+1}."""
    _check_n(n, 1)
    return v_ratio(n) * coeff_u(n) - coeff_u(n + 1)


def theorem2_gap_closed(n: int) -> Fraction:
    """The factored form of the gap; must agree with ``theorem2_gap``."""
    _check_n(n, 1)
    denom = (n + 1) ** 2 * math.factorial(n + 3)
    return (Fraction(3, 5) * (3 * n + 1) * pochhammer_exact(HALF, n) / denom
            + Fraction(1, 10) * (n * n - 11 * n - 6) * pochhammer_exact(Fraction(3, 4), n) / denom)
