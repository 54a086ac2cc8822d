"""Normal-tournament special functions and bracketed scalar root finding.

Every solver in this package reduces to one-dimensional integrals of the
standard normal density plus scalar root finding. This module owns both.

The two named constants of the n-player normal tournament:

  p_n      marginal win-probability mass when the prize threshold sits at
           the common mean effort. Defined as the limit
           (1/(n 2^n)) lim_{w->inf} [erfc(-w/sqrt(2))^n w
                                     - int_0^w erfc(-wbar/sqrt(2))^n dwbar],
           equal to int_0^inf Phi(z)^(n-1) phi(z) z dz.
  rho_n    nonpositive correction to p_n when the threshold is lowered by
           eta standard deviations; rho_n(0) = 0 and p_n + rho_n(eta) > 0
           for n >= 2.

Quadrature here is a hand-rolled adaptive Simpson rule (interval bisection
to tolerance) so its error control is certifiable; independent checks in
the oracle module integrate the same quantities through QUADPACK.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from scipy import special as _sp

SQRT_2PI = math.sqrt(2.0 * math.pi)


class NoSignChangeError(ValueError):
    """Bracket endpoints do not straddle a sign change."""


class ConvergenceError(RuntimeError):
    """Iteration budget exhausted before reaching tolerance."""


# ---------------------------------------------------------------------------
# configuration
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SpecialFnConfig:
    """Tolerances for the special-function quadratures.

    quadrature_abs_tol: absolute error target per integral.
    tail_truncation: z-value beyond which normal-tail integrands are
        treated as converged (tail mass < 1e-30 at the default 12).
    max_subdivisions: adaptive-Simpson interval budget.
    """

    quadrature_abs_tol: float = 1e-10
    tail_truncation: float = 12.0
    max_subdivisions: int = 4096

    def __post_init__(self):
        if not self.quadrature_abs_tol > 0:
            raise ValueError("quadrature_abs_tol must be positive")
        if self.tail_truncation < 8:
            raise ValueError("tail_truncation must be >= 8")
        if self.max_subdivisions < 64:
            raise ValueError("max_subdivisions must be >= 64")


@dataclass(frozen=True)
class RootFindConfig:
    """Tolerances for bracketed root finding (abs_tol is on the argument)."""

    abs_tol: float = 1e-10
    max_iter: int = 200
    use_secant: bool = True

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise ValueError("abs_tol must be positive")
        if self.max_iter < 16:
            raise ValueError("max_iter must be >= 16")


DEFAULT_SPECIAL = SpecialFnConfig()
DEFAULT_ROOT = RootFindConfig()


# ---------------------------------------------------------------------------
# elementary special functions
# ---------------------------------------------------------------------------

def erfc(x: float) -> float:
    """Complementary error function (2/sqrt(pi)) int_x^inf exp(-t^2) dt."""
    return float(_sp.erfc(x))


def inv_erfc(y: float) -> float:
    """Inverse of erfc on (0, 2); raises ValueError outside the open domain."""
    if not 0.0 < y < 2.0:
        raise ValueError("inv_erfc requires 0 < y < 2, got %r" % (y,))
    return float(_sp.erfcinv(y))


def norm_pdf(z: float) -> float:
    """Standard normal density."""
    return math.exp(-0.5 * z * z) / SQRT_2PI


def norm_cdf(z: float) -> float:
    """Standard normal distribution function."""
    return float(_sp.ndtr(z))


# ---------------------------------------------------------------------------
# adaptive quadrature
# ---------------------------------------------------------------------------

def adaptive_quad(f: Callable[[float], float], a: float, b: float,
                  cfg: SpecialFnConfig = DEFAULT_SPECIAL) -> float:
    """Adaptive composite Simpson integral of f over [a, b].

    Bisects intervals until the usual Simpson error estimate drops below
    the (locally apportioned) absolute tolerance. Raises ConvergenceError
    if the subdivision budget runs out.
    """
    if a == b:
        return 0.0
    if b < a:
        return -adaptive_quad(f, b, a, cfg)

    def simpson(x0, x2, f0, f1, f2):
        return (x2 - x0) * (f0 + 4.0 * f1 + f2) / 6.0

    fa, fb = f(a), f(b)
    m = 0.5 * (a + b)
    fm = f(m)
    whole = simpson(a, b, fa, fm, fb)
    # stack of (lo, hi, f(lo), f(mid), f(hi), simpson estimate, tol share)
    stack = [(a, b, fa, fm, fb, whole, cfg.quadrature_abs_tol)]
    total = 0.0
    used = 0
    while stack:
        lo, hi, flo, fmid, fhi, est, tol = stack.pop()
        used += 1
        if used > cfg.max_subdivisions:
            raise ConvergenceError(
                "quadrature did not converge within %d subdivisions"
                % cfg.max_subdivisions)
        mid = 0.5 * (lo + hi)
        lm = 0.5 * (lo + mid)
        rm = 0.5 * (mid + hi)
        flm, frm = f(lm), f(rm)
        left = simpson(lo, mid, flo, flm, fmid)
        right = simpson(mid, hi, fmid, frm, fhi)
        err = left + right - est
        if abs(err) <= 15.0 * tol or (hi - lo) < 1e-14 * (b - a):
            total += left + right + err / 15.0
        else:
            half = 0.5 * tol
            stack.append((lo, mid, flo, flm, fmid, left, half))
            stack.append((mid, hi, fmid, frm, fhi, right, half))
    return total


# ---------------------------------------------------------------------------
# tournament constants p_n and rho_n
# ---------------------------------------------------------------------------

def _check_n(n) -> int:
    if not float(n).is_integer() or n < 1:
        raise ValueError("n must be an integer >= 1, got %r" % (n,))
    return int(n)


@lru_cache(maxsize=None)
def _p_n_smooth(n: int, tol: float, tail: float, subs: int) -> float:
    cfg = SpecialFnConfig(tol, tail, subs)
    return adaptive_quad(
        lambda z: norm_cdf(z) ** (n - 1) * norm_pdf(z) * z, 0.0, tail, cfg)


def compute_p_n(n: int, cfg: SpecialFnConfig = DEFAULT_SPECIAL) -> float:
    """Tournament constant p_n, computed from the smooth integral form.

    Evaluates int_0^inf Phi(z)^(n-1) phi(z) z dz (truncated at the tail
    cut). The equivalent defining limit is exposed separately as
    compute_p_n_limit for cross-checking; the smooth form is primary
    because the limit form subtracts two terms that both grow like 2^n w.
    """
    n = _check_n(n)
    return _p_n_smooth(n, cfg.quadrature_abs_tol, cfg.tail_truncation,
                       cfg.max_subdivisions)


def compute_p_n_limit(n: int, cfg: SpecialFnConfig = DEFAULT_SPECIAL) -> float:
    """p_n evaluated directly from its defining truncated limit.

    (1/(n 2^n)) [erfc(-W/sqrt(2))^n W - int_0^W erfc(-wbar/sqrt(2))^n dwbar]
    at W = cfg.tail_truncation; the omitted tail is O(exp(-W^2/2)). The
    integrand grows like 2^n, so the quadrature budget is scaled by the
    n 2^n factor that divides out afterwards.
    """
    n = _check_n(n)
    w = cfg.tail_truncation
    scaled = SpecialFnConfig(cfg.quadrature_abs_tol * n * 2.0 ** n,
                             cfg.tail_truncation, cfg.max_subdivisions)
    integ = adaptive_quad(lambda t: erfc(-t / math.sqrt(2.0)) ** n,
                          0.0, w, scaled)
    return (erfc(-w / math.sqrt(2.0)) ** n * w - integ) / (n * 2.0 ** n)


def integral_erfc_pow(n: int, eta: float,
                      cfg: SpecialFnConfig = DEFAULT_SPECIAL) -> float:
    """int_0^eta erfc(w/sqrt(2))^n dw; eta may be +inf (tail-truncated)."""
    n = _check_n(n)
    if eta < 0:
        raise ValueError("eta must be >= 0, got %r" % (eta,))
    if eta == 0.0:
        return 0.0
    hi = min(eta, cfg.tail_truncation)
    return adaptive_quad(lambda w: erfc(w / math.sqrt(2.0)) ** n, 0.0, hi, cfg)


@lru_cache(maxsize=None)
def _rho_n_cached(n: int, eta: float, tol: float, tail: float, subs: int) -> float:
    cfg = SpecialFnConfig(tol, tail, subs)
    if math.isinf(eta):
        return -integral_erfc_pow(n, math.inf, cfg) / (n * 2.0 ** n)
    head = eta * erfc(eta / math.sqrt(2.0)) ** n
    return (head - integral_erfc_pow(n, eta, cfg)) / (n * 2.0 ** n)


def compute_rho_n(n: int, eta: float,
                  cfg: SpecialFnConfig = DEFAULT_SPECIAL) -> float:
    """Threshold correction rho_n(eta) <= 0; eta = +inf means no threshold.

    rho_n(eta) = (1/(n 2^n)) [eta erfc(eta/sqrt(2))^n
                              - int_0^eta erfc(w/sqrt(2))^n dw],
    which also equals int_{-eta}^0 Phi(z)^(n-1) phi(z) z dz.
    """
    n = _check_n(n)
    if eta < 0:
        raise ValueError("eta must be >= 0 (or +inf), got %r" % (eta,))
    return _rho_n_cached(n, float(eta), cfg.quadrature_abs_tol,
                         cfg.tail_truncation, cfg.max_subdivisions)


# ---------------------------------------------------------------------------
# root finding
# ---------------------------------------------------------------------------

def find_root_bracketed(f: Callable[[float], float], lo: float, hi: float,
                        cfg: RootFindConfig = DEFAULT_ROOT) -> float:
    """Root of f on [lo, hi] given a sign change at the endpoints.

    Alternates plain bisection with a secant (false position) step when
    cfg.use_secant is set, so the bracket provably halves at least every
    other iteration. Returns the bracket midpoint once its width drops
    below cfg.abs_tol.
    """
    if hi < lo:
        lo, hi = hi, lo
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise NoSignChangeError(
            "no sign change on [%g, %g]: f=%g, %g" % (lo, hi, flo, fhi))
    for it in range(cfg.max_iter):
        if hi - lo <= cfg.abs_tol:
            return 0.5 * (lo + hi)
        x = 0.5 * (lo + hi)
        if cfg.use_secant and it % 2 == 1 and fhi != flo:
            xs = (lo * fhi - hi * flo) / (fhi - flo)
            if lo < xs < hi:
                x = xs
        fx = f(x)
        if fx == 0.0:
            return x
        if (fx > 0) == (flo > 0):
            lo, flo = x, fx
        else:
            hi, fhi = x, fx
    raise ConvergenceError(
        "root finder did not converge in %d iterations" % cfg.max_iter)
