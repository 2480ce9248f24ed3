import math

import mpmath
import pytest
from hypothesis import assume, given, settings, strategies as st
from scipy.integrate import quad

from ellipstolarsky.errors import DomainError
from ellipstolarsky.stolarsky import (
    MeanParams, PositivePair, heronian_order, identric_order, lehmer_mean, log_order, log_stolarsky,
    power_mean, stolarsky, stolarsky_mp, theta, toader_mean,
)

params = st.floats(min_value=-8, max_value=8, allow_nan=False)
positives = st.floats(min_value=1e-3, max_value=1e3, allow_nan=False)


@pytest.mark.parametrize("p,q,a,b,want", [
    (2, 1, 3, 1, 2.0),                         # arithmetic mean
    (1, 0, math.e, 1, math.e - 1),             # logarithmic mean
    (0, 0, 4, 9, 6.0),                         # geometric mean
    (1, 1, 1, 2, 4 / math.e),                  # identric mean
    (1.5, 0.5, 1, 4, 7 / 3),                   # Heronian mean
    (2.75, 1.75, 1, 0, 7 / 11),                # zero-entry limits
    (2.5, 2.0, 1, 0, 0.64),
])
def test_known_values(p, q, a, b, want):
    assert stolarsky((p, q), (a, b)) == pytest.approx(want, rel=1e-14)


@pytest.mark.parametrize("p,q,branch", [
    (1, 2, "generic"), (0, 2, "p_zero"), (2, 0, "q_zero"), (1.5, 1.5, "equal"),
    (1.5, 1.5 + 1e-8, "equal"), (0, 0, "both_zero"), (1e-12, 0, "both_zero"),
])
def test_branch_classification(p, q, branch):
    assert MeanParams(p, q).branch == branch


def test_positive_pair_validation():
    with pytest.raises(DomainError):
        PositivePair(0.0, 1.0)
    with pytest.raises(DomainError):
        stolarsky((1, 2), (-1.0, 1.0))


@given(params, params, positives, positives)
@settings(max_examples=400, deadline=None)
def test_against_branch_formulas(p, q, a, b):
    assume(abs(math.log(a / b)) * max(abs(p), abs(q), 1) < 300)
    got = stolarsky((p, q), (a, b))
    # the mp oracle uses exact branches; snap near-equal parameters like the float code
    mp_p, mp_q = p, q
    mp = MeanParams(p, q)
    if mp.branch in ("equal", "both_zero"):
        mp_p = mp_q = 0.5 * (p + q) if mp.branch == "equal" else 0.0
    elif mp.branch == "p_zero":
        mp_p = 0.0
    elif mp.branch == "q_zero":
        mp_q = 0.0
    want = float(stolarsky_mp(mp_p, mp_q, a, b, 40))
    assert got == pytest.approx(want, rel=2e-13)


@given(params, params, positives, positives)
@settings(max_examples=300, deadline=None)
def test_symmetry_and_bounds(p, q, a, b):
    assume(abs(math.log(a / b)) * max(abs(p), abs(q), 1) < 300)
    s = stolarsky((p, q), (a, b))
    assert min(a, b) <= s <= max(a, b)
    assert stolarsky((q, p), (a, b)) == pytest.approx(s, rel=1e-12)
    assert stolarsky((p, q), (b, a)) == pytest.approx(s, rel=1e-12)
    assert stolarsky((p, q), (3 * a, 3 * b)) == pytest.approx(3 * s, rel=1e-12)


def test_equal_branch_is_continuous():
    base = stolarsky((1.5, 1.5), (1.0, 0.2))
    threshold = 1e-6 * (1 + 3.0)
    # just above the switch the generic formula cancels, so 1e-10 is what it can deliver
    h = threshold  # p - q = 2 * threshold
    assert MeanParams(1.5 + h, 1.5 - h).branch == "generic"
    assert stolarsky((1.5 + h, 1.5 - h), (1.0, 0.2)) == pytest.approx(base, rel=1e-10)
    for h in (1e-7, 1e-9):
        assert stolarsky((1.5 + h, 1.5 - h), (1.0, 0.2)) == pytest.approx(base, rel=1e-12)


def test_log_space_handles_close_arguments():
    d = 1e-9
    got = log_stolarsky(2.75, 1.75, 0.0, -d)
    assert got == pytest.approx(-d / 2, rel=1e-9)


@given(positives, positives, st.floats(min_value=-4, max_value=4))
@settings(max_examples=200)
def test_classical_means_are_stolarsky(a, b, p):
    assume(abs(p) > 1e-3 and abs(a - b) > 1e-6 * max(a, b))
    pair = (a, b)
    assert power_mean(p, pair) == pytest.approx(stolarsky((2 * p, p), pair), rel=1e-11)
    assert heronian_order(p, pair) == pytest.approx(stolarsky((1.5 * p, 0.5 * p), pair), rel=1e-11)
    assert log_order(p, pair) == pytest.approx(stolarsky((p, 0), pair), rel=1e-11)
    assert identric_order(p, pair) == pytest.approx(stolarsky((p, p), pair), rel=1e-11)


def test_classical_means_in_mpmath():
    x = mpmath.mpf("0.3")
    pair = (mpmath.mpf(1), x)
    with mpmath.workdps(40):
        want = stolarsky_mp(mpmath.mpf(9) / 4, mpmath.mpf(9) / 4, 1, x, 40)
        assert abs(identric_order(mpmath.mpf(9) / 4, pair) - want) < mpmath.mpf(10) ** -35


def test_lehmer_mean():
    assert lehmer_mean(0.25, (1.0, 1.0)) == 1.0
    assert lehmer_mean(1, (1.0, 3.0)) == pytest.approx(10 / 4)
    assert lehmer_mean(0, (1.0, 3.0)) == pytest.approx(2.0)


@pytest.mark.parametrize("p,want", [(2.25, math.exp(-1 / 2.25)), (2.0, 0.64), (1.75, 7 / 11)])
def test_theta_values(p, want):
    assert theta(p, 2.25) == pytest.approx(want, rel=1e-14)


def test_theta_is_continuous_at_c():
    assert theta(2.25 + 1e-7, 2.25) == pytest.approx(theta(2.25, 2.25), rel=1e-12)


@pytest.mark.parametrize("p", [0.0, 4.5, -1.0, 5.0])
def test_theta_domain(p):
    with pytest.raises(DomainError):
        theta(p, 2.25)


def test_theta_is_zero_argument_limit():
    # theta_p = S_{2c-p,p}(1, 0)
    for p in (0.5, 1.0, 1.75, 2.0, 3.0):
        assert theta(p, 2.25) == pytest.approx(stolarsky((4.5 - p, p), (1.0, 0.0)), rel=1e-13)


@pytest.mark.parametrize("a,b", [(1.0, 0.5), (0.3, 2.0), (2.0, 2.0)])
def test_toader_mean_quadrature(a, b):
    want = 2 / math.pi * quad(lambda t: math.sqrt((a * math.cos(t)) ** 2 + (b * math.sin(t)) ** 2),
                              0, math.pi / 2, epsabs=1e-14)[0]
    assert toader_mean((a, b)) == pytest.approx(want, rel=1e-13)
