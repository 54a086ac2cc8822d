"""Special functions and root finding against independent oracles.

The package computes its integrals with a hand-rolled adaptive Simpson
rule, so every check here goes through a different engine: closed forms
where they exist, scipy's QUADPACK elsewhere, and plain bisection for
the inverse functions.
"""
import math

import numpy as np
import pytest
from scipy import integrate
from scipy.stats import norm

from teambonus import (
    ConvergenceError,
    NoSignChangeError,
    RootFindConfig,
    SpecialFnConfig,
    compute_p_n,
    compute_p_n_limit,
    compute_rho_n,
    erfc,
    find_root_bracketed,
    integral_erfc_pow,
    inv_erfc,
)
from teambonus.numerics import adaptive_quad

SQRT_2PI = math.sqrt(2.0 * math.pi)

# Frozen values of p_n, cross-checked in-session against QUADPACK on
# int_0^inf Phi(z)^(n-1) phi(z) z dz and against the truncated-limit
# formula (dual agreement also asserted below and in the acceptance
# suite).
P_N_FROZEN = {
    1: 0.3989422804018228,
    2: 0.3405185360881089,
    3: 0.29604908079102565,
    5: 0.23394097282710236,
    10: 0.15388651845060533,
    15: 0.11572772320704297,
}


def quad_p_n(n):
    """QUADPACK oracle for p_n."""
    val, _ = integrate.quad(
        lambda z: norm.cdf(z) ** (n - 1) * norm.pdf(z) * z, 0.0, 14.0)
    return val


def quad_rho_n(n, eta):
    """QUADPACK oracle for rho_n(eta) = int_{-eta}^0 Phi^(n-1) phi z dz."""
    lo = -14.0 if math.isinf(eta) else -eta
    val, _ = integrate.quad(
        lambda z: norm.cdf(z) ** (n - 1) * norm.pdf(z) * z, lo, 0.0)
    return val


# ---------------------------------------------------------------------------
# erfc and its inverse
# ---------------------------------------------------------------------------

def test_erfc_at_zero():
    assert erfc(0.0) == 1.0


def test_erfc_reflection():
    assert erfc(0.7) == pytest.approx(2.0 - erfc(-0.7), abs=1e-15)


def test_erfc_against_defining_integral():
    oracle, _ = integrate.quad(
        lambda t: 2.0 / math.sqrt(math.pi) * math.exp(-t * t), 1.0, 14.0)
    assert erfc(1.0) == pytest.approx(oracle, abs=1e-12)


def test_erfc_monotone_decreasing():
    xs = np.linspace(-3, 3, 25)
    vals = [erfc(x) for x in xs]
    assert all(a > b for a, b in zip(vals, vals[1:]))


def test_inv_erfc_round_trip():
    assert inv_erfc(1.0) == pytest.approx(0.0, abs=1e-12)
    assert inv_erfc(erfc(0.5)) == pytest.approx(0.5, abs=1e-10)
    for y in (0.05, 0.3, 1.2, 1.9):
        assert erfc(inv_erfc(y)) == pytest.approx(y, abs=1e-10)


def test_inv_erfc_against_bisection():
    # independent inverse: bisect the forward function directly
    lo, hi = 0.0, 6.0
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if erfc(mid) > 0.1:
            lo = mid
        else:
            hi = mid
    assert inv_erfc(0.1) == pytest.approx(0.5 * (lo + hi), abs=1e-10)


def test_inv_erfc_domain_errors():
    for bad in (0.0, -0.5, 2.0, 2.5):
        with pytest.raises(ValueError):
            inv_erfc(bad)


# ---------------------------------------------------------------------------
# adaptive quadrature
# ---------------------------------------------------------------------------

def test_adaptive_quad_polynomial():
    assert adaptive_quad(lambda x: x * x, 0.0, 1.0) == pytest.approx(
        1.0 / 3.0, abs=1e-12)


def test_adaptive_quad_exponential_and_oscillatory():
    assert adaptive_quad(lambda x: math.exp(-x), 0.0, 12.0) == pytest.approx(
        1.0 - math.exp(-12.0), abs=1e-10)
    assert adaptive_quad(math.sin, 0.0, math.pi) == pytest.approx(
        2.0, abs=1e-10)


def test_adaptive_quad_budget_exhaustion():
    cfg = SpecialFnConfig(quadrature_abs_tol=1e-14, max_subdivisions=64)
    with pytest.raises(ConvergenceError):
        adaptive_quad(lambda x: math.sqrt(abs(x - 1.0 / 3.0)), 0.0, 1.0,
                      cfg=cfg)


def test_special_config_validation():
    with pytest.raises(ValueError):
        SpecialFnConfig(quadrature_abs_tol=0.0)
    with pytest.raises(ValueError):
        SpecialFnConfig(tail_truncation=4.0)
    with pytest.raises(ValueError):
        SpecialFnConfig(max_subdivisions=8)


# ---------------------------------------------------------------------------
# p_n
# ---------------------------------------------------------------------------

def test_p_1_closed_form():
    assert compute_p_n(1) == pytest.approx(1.0 / SQRT_2PI, abs=1e-12)


def test_p_n_frozen_table():
    for n, val in P_N_FROZEN.items():
        assert compute_p_n(n) == pytest.approx(val, abs=1e-12)


def test_p_n_against_quadpack():
    for n in (1, 2, 3, 4, 7, 12, 20):
        assert compute_p_n(n) == pytest.approx(quad_p_n(n), abs=1e-10)


def test_p_n_dual_formula_agreement():
    # truncated-limit form vs the smooth change-of-variables form
    for n in (1, 2, 5, 10, 15, 20):
        assert compute_p_n_limit(n) == pytest.approx(compute_p_n(n),
                                                     abs=1e-8)


def test_p_n_positive_and_decreasing():
    vals = [compute_p_n(n) for n in range(1, 21)]
    assert all(v > 0 for v in vals)
    assert all(a > b for a, b in zip(vals, vals[1:]))


def test_n_p_n_strictly_increasing():
    vals = [n * compute_p_n(n) for n in range(2, 21)]
    assert all(a < b for a, b in zip(vals, vals[1:]))


def test_p_n_rejects_bad_n():
    with pytest.raises(ValueError):
        compute_p_n(0)
    with pytest.raises(ValueError):
        compute_p_n_limit(-3)


# ---------------------------------------------------------------------------
# rho_n
# ---------------------------------------------------------------------------

def test_rho_zero_eta():
    for n in (1, 2, 5, 10):
        assert compute_rho_n(n, 0.0) == 0.0


def test_rho_3_against_quadrature():
    assert compute_rho_n(3, 1.0) == pytest.approx(quad_rho_n(3, 1.0),
                                                  abs=1e-10)
    assert compute_rho_n(3, 1.0) == pytest.approx(-0.012358330149399625,
                                                  abs=1e-12)


def test_rho_nonpositive_and_nonincreasing_in_eta():
    for n in (1, 2, 3, 6, 10):
        etas = [0.0, 0.25, 0.5, 1.0, 2.0, 4.0, math.inf]
        vals = [compute_rho_n(n, eta) for eta in etas]
        assert all(v <= 0 for v in vals)
        # 1e-12 slack: the eta=inf branch truncates its tail separately
        assert all(a >= b - 1e-12 for a, b in zip(vals, vals[1:]))


def test_rho_infinite_eta_limit():
    for n in (2, 3, 10):
        assert compute_rho_n(n, math.inf) == pytest.approx(
            quad_rho_n(n, math.inf), abs=1e-10)
    # for n = 2 and 3 the full-line integral p_n + rho_n(inf) collapses
    # to 1/(2 sqrt(pi)) by Stein's identity
    for n in (2, 3):
        assert compute_p_n(n) + compute_rho_n(n, math.inf) == pytest.approx(
            0.5 / math.sqrt(math.pi), abs=1e-10)


def test_p_plus_rho_positive_for_n_ge_2():
    for n in (2, 3, 5, 10, 15):
        for eta in (0.5, 1.0, 3.0, math.inf):
            assert compute_p_n(n) + compute_rho_n(n, eta) > 0


def test_rho_rejects_negative_eta():
    with pytest.raises(ValueError):
        compute_rho_n(3, -0.1)


# ---------------------------------------------------------------------------
# the erfc-power integral
# ---------------------------------------------------------------------------

def test_integral_erfc_pow_empty_interval():
    for n in (1, 4, 9):
        assert integral_erfc_pow(n, 0.0) == 0.0


def test_integral_erfc_pow_n1_closed_antiderivative():
    # d/dx [x erfc(x/sqrt(2)) + sqrt(2/pi) (1 - exp(-x^2/2))] = erfc(x/sqrt(2))
    for eta in (0.3, 1.0, 2.0, 5.0):
        closed = (eta * math.erfc(eta / math.sqrt(2.0))
                  + math.sqrt(2.0 / math.pi)
                  * (1.0 - math.exp(-0.5 * eta * eta)))
        assert integral_erfc_pow(1, eta) == pytest.approx(closed, abs=1e-10)


def test_integral_erfc_pow_monotone_and_bounded():
    vals = [integral_erfc_pow(4, eta) for eta in (0.5, 1.0, 2.0, 6.0)]
    assert all(a < b for a, b in zip(vals, vals[1:]))
    assert integral_erfc_pow(4, 2.0) < 2.0
    limit = integral_erfc_pow(4, math.inf)
    assert vals[-1] <= limit + 1e-12
    assert integral_erfc_pow(4, 40.0) == pytest.approx(limit, abs=1e-12)


def test_integral_erfc_pow_rejects_negative():
    with pytest.raises(ValueError):
        integral_erfc_pow(2, -1.0)


# ---------------------------------------------------------------------------
# root finding
# ---------------------------------------------------------------------------

def test_root_linear():
    assert find_root_bracketed(lambda x: x - 1.0, 0.0, 2.0) == pytest.approx(
        1.0, abs=1e-10)


def test_root_first_best_equation():
    # c(e) = e^2/2 so c'(e) - 1 has its root at 1
    assert find_root_bracketed(lambda e: e - 1.0, 0.0, 2.0) == pytest.approx(
        1.0, abs=1e-10)


def test_root_cubic_against_numpy():
    roots = np.roots([1.0, 0.0, -2.0, -5.0])
    real = float(roots[np.isreal(roots)].real[0])
    got = find_root_bracketed(lambda x: x ** 3 - 2.0 * x - 5.0, 0.0, 3.0)
    assert got == pytest.approx(real, abs=1e-9)


def test_root_residual_consistent_with_slope():
    cfg = RootFindConfig(abs_tol=1e-12)
    x = find_root_bracketed(lambda t: math.cos(t) - t, 0.0, 1.0, cfg=cfg)
    # |f(x)| <= |f'| * bracket width, with slope ~ 1.67 here
    assert abs(math.cos(x) - x) < 2.0 * 1e-12


def test_root_no_sign_change():
    with pytest.raises(NoSignChangeError):
        find_root_bracketed(lambda x: x * x + 1.0, -1.0, 1.0)


def test_root_endpoint_zero_is_accepted():
    assert find_root_bracketed(lambda x: x, 0.0, 1.0) == pytest.approx(
        0.0, abs=1e-10)


def test_root_config_validation():
    with pytest.raises(ValueError):
        RootFindConfig(abs_tol=-1e-10)
    with pytest.raises(ValueError):
        RootFindConfig(max_iter=4)
