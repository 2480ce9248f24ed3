"""Grid monotonicity scanner."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np


@dataclass(frozen=True)
class MonotonicityReport:
    direction: str  # "increasing", "decreasing" or "non-monotone"
    max_violation: float
    violation_at: Optional[float]
    grid_size: int

    @property
    def is_monotone(self) -> bool:
        return self.direction != "non-monotone"


def open_grid(n: int, lo: float = 0.0, hi: float = 1.0) -> np.ndarray:
    """n interior points lo + (hi - lo) * i/(n+1), i = 1..n."""
    return lo + (hi - lo) * np.arange(1, n + 1) / (n + 1)


def report_from_values(xs, ys, tol: float = 1e-12) -> MonotonicityReport:
    """Classify a sampled profile.

    A direction is accepted when every consecutive difference respects it to
    within ``tol``; with ``tol == 0`` the differences must be strict.  A flat
    profile with tol > 0 is reported as increasing.
    """
    xs = np.asarray(xs, dtype=float)
    diffs = np.diff(np.asarray(ys, dtype=float))
    n = len(xs)
    if diffs.size == 0:
        return MonotonicityReport("increasing", 0.0, None, n)
    if tol == 0:
        inc_ok, dec_ok = bool(np.all(diffs > 0)), bool(np.all(diffs < 0))
    else:
        inc_ok, dec_ok = bool(np.all(diffs >= -tol)), bool(np.all(diffs <= tol))
    inc_bad = float(max(0.0, -diffs.min()))
    dec_bad = float(max(0.0, diffs.max()))
    if inc_ok:
        return MonotonicityReport("increasing", inc_bad, None, n)
    if dec_ok:
        return MonotonicityReport("decreasing", dec_bad, None, n)
    if inc_bad <= dec_bad:
        i = int(np.argmin(diffs))
        worst = inc_bad
    else:
        i = int(np.argmax(diffs))
        worst = dec_bad
    return MonotonicityReport("non-monotone", worst, float(xs[i + 1]), n)


def monotonicity_scan(f: Callable[[float], float], lo: float, hi: float,
                      n: int = 2000, tol: float = 1e-12) -> MonotonicityReport:
    """Evaluate f on an n-point uniform grid over [lo, hi] and classify it."""
    if not lo < hi:
        raise ValueError("need lo < hi")
    if n < 16:
        raise ValueError("grid must have at least 16 points")
    xs = np.linspace(lo, hi, n)
    ys = [f(float(x)) for x in xs]
    return report_from_values(xs, ys, tol)
