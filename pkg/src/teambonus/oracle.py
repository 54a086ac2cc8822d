"""Independent verification of the contract solvers.

Two verification routes, deliberately disjoint from the solver code:

  * quadrature of the general location-family integrals through
    scipy's QUADPACK (the solvers use closed forms built on p_n/rho_n
    from a hand-rolled adaptive Simpson rule), and
  * Monte-Carlo simulation of one worker's best response and of the
    no-reneging bounds in the repeated game.

Nothing here feeds back into the solvers; these functions only confirm
or flag what the contracts module produced.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from scipy import integrate as _integrate

from .contracts import (
    BonusScheme,
    ContractSolution,
    CostFunction,
    EnvParams,
    REGIME_EQUAL,
    REGIME_INTEGRATED,
    REGIME_OBSERVABLE,
    REGIME_SEPARATE,
    VARIANT_EQUAL_SPLIT,
    VARIANT_TOURNAMENT,
)
from .numerics import ConvergenceError, SQRT_2PI, norm_cdf

_MC_CHUNK = 200_000   # fixed so results never depend on how draws are split


# ---------------------------------------------------------------------------
# location family
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LocationFamily:
    """Performance distribution family x = e + sigma Z, Z standard normal.

    The density depends on x only through x - e, so tournament integrals
    are invariant under joint shifts of effort and threshold. base is an
    enumeration hook; only "normal" is implemented.
    """

    sigma: float
    base: str = "normal"

    def __post_init__(self):
        if self.base != "normal":
            raise ValueError("only the normal base density is supported")
        if not self.sigma > 0:
            raise ValueError("sigma must be > 0 for quadrature oracles")

    def pdf(self, x: float, e: float) -> float:
        z = (x - e) / self.sigma
        return math.exp(-0.5 * z * z) / (self.sigma * SQRT_2PI)

    def cdf(self, x: float, e: float) -> float:
        return norm_cdf((x - e) / self.sigma)

    def pdf_de(self, x: float, e: float) -> float:
        """Derivative of the density in effort: f(x;e) (x-e)/sigma^2."""
        return self.pdf(x, e) * (x - e) / self.sigma ** 2

    def t_star(self, e: float) -> float:
        """Threshold where pdf_de crosses zero (the mean, for normal)."""
        return e


# ---------------------------------------------------------------------------
# quadrature oracles
# ---------------------------------------------------------------------------

def tournament_marginal(n: int, e: float, kappa: float,
                        fam: LocationFamily, abs_tol: float = 1e-10) -> float:
    """int_kappa^inf F(x;e)^(n-1) f_e(x;e) dx by QUADPACK.

    This is the marginal win probability of one worker in an n-player
    threshold tournament; the closed form is (p_n + rho_n(eta))/sigma
    with eta = (e - kappa)/sigma.
    """
    if n < 1:
        raise ValueError("n must be >= 1")

    def integrand(x):
        return fam.cdf(x, e) ** (n - 1) * fam.pdf_de(x, e)

    lo = kappa if math.isfinite(kappa) else e - 14.0 * fam.sigma
    hi = e + 14.0 * fam.sigma
    val, err = _integrate.quad(integrand, lo, hi,
                               epsabs=abs_tol, epsrel=0.0, limit=400,
                               points=[e] if lo < e < hi else None)
    if err > max(100.0 * abs_tol, 1e-8):
        raise ConvergenceError(
            "tournament_marginal quadrature error %g too large" % err)
    return val


def team_win_marginal(n: int, e: float, fam: LocationFamily,
                      abs_tol: float = 1e-10) -> float:
    """Marginal trigger-clearing probability of team output at its mean.

    int_{n e}^inf g_e(y) dy where y is the team total, normal with mean
    n e and variance n sigma^2; closed form 1/(sigma sqrt(2 pi n)).
    """
    s = fam.sigma * math.sqrt(n)
    mean = n * e

    def integrand(y):
        z = (y - mean) / s
        g = math.exp(-0.5 * z * z) / (s * SQRT_2PI)
        return g * (y - mean) / s ** 2

    val, err = _integrate.quad(integrand, mean, mean + 14.0 * s,
                               epsabs=abs_tol, epsrel=0.0, limit=200)
    if err > max(100.0 * abs_tol, 1e-8):
        raise ConvergenceError(
            "team_win_marginal quadrature error %g too large" % err)
    return val


def check_shift_invariance_sep(n: int, e: float, eta: float,
                               fam: LocationFamily, tol: float = 1e-8) -> bool:
    """Location invariance of the delegated-bonus tournament integrals.

    Shifting effort e and threshold e - sigma eta down to effort 0 and
    threshold -sigma eta must leave both the per-worker win probability
    and the marginal integral unchanged.
    """
    kappa = e - fam.sigma * eta
    m1 = tournament_marginal(n, e, kappa, fam)
    m2 = tournament_marginal(n, 0.0, -fam.sigma * eta, fam)
    w1 = (1.0 - fam.cdf(kappa, e) ** n) / n
    w2 = (1.0 - fam.cdf(-fam.sigma * eta, 0.0) ** n) / n
    return abs(m1 - m2) <= tol and abs(w1 - w2) <= tol


# ---------------------------------------------------------------------------
# Monte-Carlo best response
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class McConfig:
    """Settings for the best-response simulation.

    deviation_grid must contain the candidate optimum e_star (checked at
    call time); common random numbers are used across all grid points.
    """

    draws: int = 1_000_000
    seed: int = 20260815
    deviation_grid: Optional[Tuple[float, ...]] = None
    confidence_z: float = 3.0

    def __post_init__(self):
        if self.draws < 100_000:
            raise ValueError("draws must be >= 1e5 for usable CIs")
        if self.confidence_z <= 0:
            raise ValueError("confidence_z must be positive")


@dataclass(frozen=True)
class McReport:
    """Simulated payoff curve of one deviating worker."""

    efforts: Tuple[float, ...]
    payoffs: Tuple[float, ...]
    ci_half_widths: Tuple[float, ...]
    argmax_effort: float
    target_effort: float
    grid_step: float
    within_one_step: bool
    conclusive: bool


def _default_grid(e_star: float, step: float = 0.02,
                  span: float = 0.2) -> Tuple[float, ...]:
    k = int(round(span / step))
    return tuple(max(0.0, e_star + i * step) for i in range(-k, k + 1))


def mc_best_response(scheme: BonusScheme, e_star: float, p: EnvParams,
                     c: CostFunction, cfg: McConfig = McConfig()) -> McReport:
    """Simulate one worker's payoff at each deviation effort.

    The other n-1 workers stay at e_star; the same standard normal draws
    are reused for every grid point, so payoff differences across the
    grid are far tighter than the per-point confidence intervals.
    """
    if p.sigma <= 0:
        raise ValueError("mc_best_response needs sigma > 0")
    grid = cfg.deviation_grid or _default_grid(e_star)
    grid = tuple(grid)
    if min(abs(g - e_star) for g in grid) > 1e-9:
        raise ValueError("deviation_grid must contain e_star")

    rng = np.random.default_rng(cfg.seed)
    n_grid = len(grid)
    hit_sum = np.zeros(n_grid)
    done = 0
    while done < cfg.draws:
        m = min(_MC_CHUNK, cfg.draws - done)
        z = rng.standard_normal((m, p.n))
        z0 = z[:, 0]
        others = e_star + p.sigma * z[:, 1:]
        if scheme.variant == VARIANT_TOURNAMENT:
            others_max = others.max(axis=1)
            floor = np.maximum(others_max, scheme.threshold)
            for j, d in enumerate(grid):
                x = d + p.sigma * z0
                hit_sum[j] += np.count_nonzero(x > floor)
            pay_amount = scheme.prize
        elif scheme.variant == VARIANT_EQUAL_SPLIT:
            others_sum = others.sum(axis=1)
            for j, d in enumerate(grid):
                x = d + p.sigma * z0
                hit_sum[j] += np.count_nonzero(x + others_sum
                                               > scheme.team_trigger)
            pay_amount = scheme.per_worker_bonus
        else:
            raise ValueError("unknown scheme variant %r" % (scheme.variant,))
        done += m

    p_hit = hit_sum / cfg.draws
    payoffs = np.array([scheme.alpha_i + pay_amount * ph - c.c(d)
                        for ph, d in zip(p_hit, grid)])
    ci = cfg.confidence_z * pay_amount * np.sqrt(
        np.maximum(p_hit * (1.0 - p_hit), 0.0) / cfg.draws)

    best = int(np.argmax(payoffs))
    steps = np.diff(sorted(grid))
    step = float(np.min(steps)) if len(steps) else 0.0
    within = abs(grid[best] - e_star) <= step + 1e-12
    # conclusive when the top payoff beats every point more than one grid
    # step away by the summed interval half-widths
    conclusive = True
    for j in range(n_grid):
        if abs(grid[j] - grid[best]) > step + 1e-12:
            if payoffs[best] - payoffs[j] <= ci[best] + ci[j]:
                conclusive = False
                break

    return McReport(
        efforts=grid, payoffs=tuple(float(v) for v in payoffs),
        ci_half_widths=tuple(float(v) for v in ci),
        argmax_effort=float(grid[best]), target_effort=float(e_star),
        grid_step=step, within_one_step=within, conclusive=conclusive)


# ---------------------------------------------------------------------------
# no-reneging checks
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NoRenegingReport:
    """Signed promise-keeping slacks for the paying parties.

    A slack is (continuation value) - (largest bonus the party might be
    tempted to withhold); math.inf marks a vacuous constraint. Negative
    slack beyond tolerance signals a solver bug, it is reported rather
    than raised.
    """

    regime: str
    owner_slack: float
    manager_slack: float
    tol: float = 1e-8

    @property
    def owner_ok(self) -> bool:
        return self.owner_slack >= -self.tol

    @property
    def manager_ok(self) -> bool:
        return self.manager_slack >= -self.tol


def check_no_reneging(sol: ContractSolution, p: EnvParams,
                      tol: float = 1e-8) -> NoRenegingReport:
    """Evaluate the promise-keeping bounds of a feasible solution."""
    if not sol.feasible:
        raise ValueError("check_no_reneging expects a feasible solution")
    dr = p.delta_ratio
    if sol.regime == REGIME_OBSERVABLE:
        owner = dr * sol.owner_profit - sol.scheme.prize
        manager = math.inf
    elif sol.regime == REGIME_EQUAL:
        owner = dr * sol.owner_profit - p.n * sol.scheme.per_worker_bonus
        manager = math.inf
    elif sol.regime == REGIME_INTEGRATED:
        owner = dr * sol.owner_profit - sol.owner_prize_B0
        manager = dr * sol.k0 - sol.scheme.prize
    elif sol.regime == REGIME_SEPARATE:
        owner = dr * sol.owner_profit
        if p.phi == 0.0:
            manager = math.inf
        else:
            # manager + colluding worker continuation vs the pot share
            # phi b_t they could grab; workers net zero, so the stream is
            # the manager rent alone
            manager = dr * (sol.alpha_m - p.u0_bar) - p.phi * sol.b_t
    else:
        raise ValueError("unknown regime %r" % (sol.regime,))
    return NoRenegingReport(regime=sol.regime, owner_slack=owner,
                            manager_slack=manager, tol=tol)
