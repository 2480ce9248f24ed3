"""Strict inequality chains between means and (2/pi) E, checked in mpmath.

Consecutive members of these chains agree to order r^8 .. r^12 at small r,
so at r = 0.001 the gaps are around 1e-40: well below double precision.
Every value here is computed at ``dps`` decimal digits.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Fr

import mpmath

from ..approximations import ApproxId, approx_value_at_x_mp
from ..special_fn import ellip_ke_mp
from ..stolarsky import heronian_order, identric_order, log_order, power_mean, stolarsky_mp
from .scan import open_grid

DEFAULT_DPS = 80

MEAN_CHAIN_NAMES = (
    "A_{9/2}^{1/3} G^{2/3}", "sqrt(G He_{9/2})", "L_{9/2}", "He_{9/4}", "A_{3/2}",
    "S_{11/4,7/4}", "(2/pi)E", "S_{5/2,2}", "I_{9/4}",
)


@dataclass(frozen=True)
class ChainResult:
    name: str
    holds: bool
    points: int
    worst_gap: float  # smallest consecutive difference over the grid
    worst_at: float
    worst_link: int  # index of the lower member of the tightest pair


def _chain(name, grid, values_at):
    worst, worst_at, worst_link = None, None, -1
    for t in grid:
        vals = values_at(t)
        for i in range(len(vals) - 1):
            gap = vals[i + 1] - vals[i]
            if worst is None or gap < worst:
                worst, worst_at, worst_link = gap, float(t), i
    return ChainResult(name, bool(worst > 0), len(grid), float(worst), worst_at, worst_link)


def _one_and_comp(r):
    r = mpmath.mpf(r)
    return r, mpmath.sqrt((1 - r) * (1 + r))


def mean_chain_values(r, dps: int = DEFAULT_DPS):
    """The nine members of the S_{9/2-p,p} chain at (1, r'), ascending."""
    with mpmath.workdps(dps):
        r, x = _one_and_comp(r)
        one = mpmath.mpf(1)
        pair = (one, x)
        geo = mpmath.sqrt(x)
        _, e = ellip_ke_mp(r, dps)
        return [
            power_mean(Fr(9, 2), pair) ** (one / 3) * geo ** (mpmath.mpf(2) / 3),
            mpmath.sqrt(geo * heronian_order(Fr(9, 2), pair)),
            log_order(Fr(9, 2), pair),
            heronian_order(Fr(9, 4), pair),
            power_mean(Fr(3, 2), pair),
            stolarsky_mp(Fr(11, 4), Fr(7, 4), one, x, dps),
            2 * e / mpmath.pi,
            stolarsky_mp(Fr(5, 2), 2, one, x, dps),
            identric_order(Fr(9, 4), pair),
        ]


def check_mean_chain(n: int = 999, dps: int = DEFAULT_DPS) -> ChainResult:
    return _chain("mean_chain", open_grid(n), lambda r: mean_chain_values(r, dps))


def double_inequality_values(which: str, r, dps: int = DEFAULT_DPS):
    """Members of the two sharp double inequalities, ascending.

    "7/4": S < (2/pi)E < (22-7pi)/(4pi) + 11(pi-2)/(4pi) S < 22/(7pi) S, S = S_{11/4,7/4}
    "2":   25/(8pi) S < -2(8pi-25)/(9pi) + 25(pi-2)/(9pi) S < (2/pi)E < S, S = S_{5/2,2}
    """
    with mpmath.workdps(dps):
        r, x = _one_and_comp(r)
        pi = mpmath.pi
        _, e = ellip_ke_mp(r, dps)
        ee = 2 * e / pi
        if which == "7/4":
            s = stolarsky_mp(Fr(11, 4), Fr(7, 4), 1, x, dps)
            return [s, ee, (22 - 7 * pi) / (4 * pi) + 11 * (pi - 2) / (4 * pi) * s, 22 / (7 * pi) * s]
        if which == "2":
            s = stolarsky_mp(Fr(5, 2), 2, 1, x, dps)
            return [25 / (8 * pi) * s, -2 * (8 * pi - 25) / (9 * pi) + 25 * (pi - 2) / (9 * pi) * s, ee, s]
    raise ValueError(f"unknown double inequality {which!r}")


def check_double_inequality(which: str, n: int = 999, dps: int = DEFAULT_DPS) -> ChainResult:
    return _chain(f"double_inequality_{which}", open_grid(n),
                  lambda r: double_inequality_values(which, r, dps))


def _approx_chain(ids, x, dps):
    return [approx_value_at_x_mp(a, x, dps) for a in ids]


LOWER_ORDER = (ApproxId.A4, ApproxId.A1, ApproxId.A2, ApproxId.A3, ApproxId.A5)


def check_lower_ordering(n: int = 999, dps: int = DEFAULT_DPS) -> ChainResult:
    """A4 < A1 < A2 < A3 < A5 as functions of x on (0, 1)."""
    return _chain("lower_ordering", open_grid(n), lambda x: _approx_chain(LOWER_ORDER, x, dps))


def check_upper_dominance(n: int = 999, dps: int = DEFAULT_DPS) -> ChainResult:
    """max(A7, A8) < A6 as functions of x on (0, 1)."""
    def values(x):
        a6, a7, a8 = _approx_chain((ApproxId.A6, ApproxId.A7, ApproxId.A8), x, dps)
        return [max(a7, a8), a6]
    return _chain("upper_dominance", open_grid(n), values)


def a8_minus_a7(x, dps: int = DEFAULT_DPS):
    a7, a8 = _approx_chain((ApproxId.A7, ApproxId.A8), x, dps)
    return a8 - a7


def locate_crossing(n: int = 999, dps: int = DEFAULT_DPS):
    """Sign changes of A8 - A7 on the open x-grid, each refined to ~1e-15.

    Returns the list of crossing abscissae.
    """
    xs = open_grid(n)
    signs = [mpmath.sign(a8_minus_a7(x, dps)) for x in xs]
    roots = []
    for i in range(len(xs) - 1):
        if signs[i] != signs[i + 1]:
            with mpmath.workdps(dps):
                root = mpmath.findroot(lambda t: a8_minus_a7(t, dps), (xs[i], xs[i + 1]),
                                       solver="anderson")
            roots.append(float(root))
    return roots
