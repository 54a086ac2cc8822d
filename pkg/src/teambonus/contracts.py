"""Solvers for self-enforcing bonus contracts of an n-worker team.

Environment: an owner employs n identical workers, optionally through a
manager. Worker i chooses effort e_i at strictly convex cost c(e_i) and
produces performance x_i = e_i + sigma * Z_i with Z_i standard normal.
Output is worth its expectation, each worker has outside income u_bar per
period, the manager has u0_bar, and bonuses are only enforced by the
threat of ending the relationship (discount factor delta). A colluding
manager-worker pair can divert the fraction phi of a delegated bonus pot.

Four regimes are solved in stationary strategies:

  ObservableBenchmark  owner pays a tournament prize on individual
                       performance directly, threshold at the mean.
  EqualBonus           owner splits a bonus equally when team output
                       clears a trigger; no manager.
  IntegratedManager    owner pays the manager from a team-trigger pot;
                       the manager runs the worker tournament and keeps a
                       rent k0 that makes his promise credible.
  SeparateManager      the manager's pay is decoupled from the worker
                       bonus pot b_t, which is destroyed (not pocketed)
                       when nobody clears the threshold; the threshold
                       drops eta standard deviations below the mean to
                       cheapen the manager's temptation to collude.

Every solver returns a ContractSolution with the full profit
decomposition. Workers are always held at their outside option, so in a
feasible solution worker_profit is identically zero and

  surplus = owner_profit + manager_profit + destroyed_surplus.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from .numerics import (
    DEFAULT_ROOT,
    DEFAULT_SPECIAL,
    RootFindConfig,
    SpecialFnConfig,
    compute_p_n,
    compute_rho_n,
    erfc,
    find_root_bracketed,
    integral_erfc_pow,
)

REGIME_OBSERVABLE = "ObservableBenchmark"
REGIME_EQUAL = "EqualBonus"
REGIME_INTEGRATED = "IntegratedManager"
REGIME_SEPARATE = "SeparateManager"
ALL_REGIMES = (REGIME_OBSERVABLE, REGIME_EQUAL, REGIME_INTEGRATED,
               REGIME_SEPARATE)

BRANCH_FIRST_BEST = "FirstBest"
BRANCH_INTERIOR = "Interior"
BRANCH_BINDING = "SubconstraintBinding"
BRANCH_THRESHOLD_MINUS_INF = "ThresholdMinusInfinity"
BRANCH_NONE = "none"

VARIANT_TOURNAMENT = "TournamentWithThreshold"
VARIANT_EQUAL_SPLIT = "EqualSplit"


class InfeasibleSolutionError(RuntimeError):
    """Profit accessor called on an infeasible solution."""


# ---------------------------------------------------------------------------
# domain types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EnvParams:
    """Team environment.

    n: worker count (>= 2).
    sigma: performance standard deviation, >= 0.
    delta: common per-period discount factor in (0, 1).
    u_bar: worker outside income per period.
    u0_bar: manager outside income plus managing cost per period.
    phi: fraction of a delegated bonus pot a colluding manager-worker
        pair can capture, in [0, 1].
    """

    n: int
    sigma: float
    delta: float
    u_bar: float
    u0_bar: float = 0.0
    phi: float = 1.0

    def __post_init__(self):
        if not float(self.n).is_integer() or self.n < 2:
            raise ValueError("n must be an integer >= 2, got %r" % (self.n,))
        object.__setattr__(self, "n", int(self.n))
        if not (0.0 < self.delta < 1.0):
            raise ValueError("delta must lie in (0,1), got %r" % (self.delta,))
        if self.sigma < 0:
            raise ValueError("sigma must be >= 0, got %r" % (self.sigma,))
        if self.u_bar < 0:
            raise ValueError("u_bar must be >= 0, got %r" % (self.u_bar,))
        if self.u0_bar < 0:
            raise ValueError("u0_bar must be >= 0, got %r" % (self.u0_bar,))
        if not (0.0 <= self.phi <= 1.0):
            raise ValueError("phi must lie in [0,1], got %r" % (self.phi,))

    @property
    def delta_ratio(self) -> float:
        """delta / (1 - delta), the continuation weight."""
        return self.delta / (1.0 - self.delta)


@dataclass(frozen=True)
class CostFunction:
    """Effort cost c(e) = (a/q) e^q with c(0) = c'(0) = 0 and c'' > 0.

    kind "quadratic" pins q = 2 (the common benchmark, c = a e^2 / 2);
    kind "power" takes any exponent q > 1. The scale a multiplies the
    marginal cost: c'(e) = a e^(q-1), so first-best effort (c'(e) = 1)
    is a^(-1/(q-1)), which is 1 whenever a = 1.
    """

    kind: str = "quadratic"
    a: float = 1.0
    q: float = 2.0

    def __post_init__(self):
        if self.kind not in ("quadratic", "power"):
            raise ValueError("unknown cost kind %r" % (self.kind,))
        if self.kind == "quadratic":
            object.__setattr__(self, "q", 2.0)
        if not self.a > 0:
            raise ValueError("cost scale a must be > 0, got %r" % (self.a,))
        if not self.q > 1:
            raise ValueError("cost exponent q must be > 1, got %r" % (self.q,))

    def c(self, e: float) -> float:
        if e < 0:
            raise ValueError("effort must be >= 0")
        return self.a * e ** self.q / self.q

    def c1(self, e: float) -> float:
        """Marginal cost c'(e)."""
        if e < 0:
            raise ValueError("effort must be >= 0")
        return self.a * e ** (self.q - 1.0)

    def c2(self, e: float) -> float:
        """Curvature c''(e)."""
        if e < 0:
            raise ValueError("effort must be >= 0")
        return self.a * (self.q - 1.0) * e ** (self.q - 2.0) if e > 0 else (
            self.a if self.q == 2.0 else (0.0 if self.q > 2.0 else math.inf))

    def first_best(self) -> float:
        """Effort solving c'(e) = 1."""
        return self.a ** (-1.0 / (self.q - 1.0))

    @classmethod
    def from_string(cls, spec: str) -> "CostFunction":
        """Parse "quadratic[:a]" or "power:q[:a]"."""
        parts = spec.strip().split(":")
        kind = parts[0]
        if kind == "quadratic":
            if len(parts) > 2:
                raise ValueError("quadratic takes at most one parameter")
            a = float(parts[1]) if len(parts) == 2 else 1.0
            return cls("quadratic", a=a)
        if kind == "power":
            if len(parts) < 2 or len(parts) > 3:
                raise ValueError("power takes q and optionally a")
            q = float(parts[1])
            a = float(parts[2]) if len(parts) == 3 else 1.0
            return cls("power", a=a, q=q)
        raise ValueError("unknown cost kind %r" % (kind,))

    def to_string(self) -> str:
        if self.kind == "quadratic":
            return "quadratic:%g" % self.a
        return "power:%g:%g" % (self.q, self.a)


@dataclass(frozen=True)
class BonusScheme:
    """A bonus rule plus the per-worker base salary that pairs with it.

    variant "TournamentWithThreshold": the best performer wins `prize`
    if her performance also clears `threshold` (threshold may be -inf).
    variant "EqualSplit": every worker gets `per_worker_bonus` when team
    output clears `team_trigger`.
    """

    variant: str
    alpha_i: float
    threshold: Optional[float] = None
    prize: Optional[float] = None
    per_worker_bonus: Optional[float] = None
    team_trigger: Optional[float] = None

    def __post_init__(self):
        if self.variant not in (VARIANT_TOURNAMENT, VARIANT_EQUAL_SPLIT):
            raise ValueError("unknown scheme variant %r" % (self.variant,))
        if self.prize is not None and self.prize < 0:
            raise ValueError("prize must be >= 0")
        if self.per_worker_bonus is not None and self.per_worker_bonus < 0:
            raise ValueError("per_worker_bonus must be >= 0")


@dataclass(frozen=True)
class ContractSolution:
    """Full solution of one regime at one parameter point.

    Fields not applicable to the regime (or undefined because no root
    exists) are None. feasible is False either when the governing
    equation has no positive root (numeric fields None) or when a root
    exists but the owner's profit is negative (numbers kept for
    inspection).
    """

    regime: str
    branch: str
    feasible: bool
    effort: Optional[float] = None
    scheme: Optional[BonusScheme] = None
    eta: Optional[float] = None          # SeparateManager threshold depth
    b_t: Optional[float] = None          # SeparateManager total worker bonus
    alpha_t: Optional[float] = None      # total worker salary, n * alpha_i
    alpha_m: Optional[float] = None      # manager salary (SeparateManager)
    alpha_0: Optional[float] = None      # owner-to-manager salary (Integrated)
    k0: Optional[float] = None           # manager rent (IntegratedManager)
    owner_prize_B0: Optional[float] = None   # owner-to-manager bonus pot
    owner_profit: Optional[float] = None
    manager_profit: Optional[float] = None
    worker_profit: Optional[float] = None
    surplus: Optional[float] = None
    destroyed_surplus: Optional[float] = None


def _no_root(regime: str) -> ContractSolution:
    return ContractSolution(regime=regime, branch=BRANCH_NONE, feasible=False)


# ---------------------------------------------------------------------------
# root-finding helpers
# ---------------------------------------------------------------------------

def _effort_upper(c: CostFunction) -> float:
    # all optima satisfy c'(e*) <= 1; one unit of margin for the scans
    return c.first_best() + 1.0


def _largest_root(f: Callable[[float], float], lo: float, hi: float,
                  cfg: RootFindConfig, samples: int = 800) -> Optional[float]:
    """Rightmost sign change of f on [lo, hi], refined by bisection.

    Returns None when no crossing is seen at the scan resolution; a
    tangency narrower than (hi-lo)/samples is treated as no root.
    """
    if hi <= lo:
        return None
    step = (hi - lo) / samples
    x_hi = hi
    f_hi = f(x_hi)
    if f_hi == 0.0:
        return x_hi
    for i in range(samples, 0, -1):
        x_lo = lo + (i - 1) * step
        f_lo = f(x_lo)
        if f_lo == 0.0:
            if x_lo > lo:
                return x_lo
        elif (f_lo > 0) != (f_hi > 0):
            return find_root_bracketed(f, x_lo, x_hi, cfg)
        x_hi, f_hi = x_lo, f_lo
    return None


@lru_cache(maxsize=None)
def _eta_root(n: int, phi: float, delta: float, tol: float, tail: float,
              subs: int, root_tol: float) -> float:
    """Threshold depth eta for the delegated-bonus regime.

    Unique root of 2^n (n p_n - eta phi (1-delta)/delta)
                   = int_0^eta erfc(w/sqrt(2))^n dw
    on (0, n p_n delta / (phi (1-delta))]: the left side falls strictly,
    the right side rises strictly. Depends only on (n, phi, delta).
    """
    fn_cfg = SpecialFnConfig(tol, tail, subs)
    pn = compute_p_n(n, fn_cfg)
    slope = phi * (1.0 - delta) / delta
    hi = n * pn / slope

    def gap(eta):
        lhs = 2.0 ** n * (n * pn - eta * slope)
        return lhs - integral_erfc_pow(n, eta, fn_cfg)

    return find_root_bracketed(gap, 0.0, hi,
                               RootFindConfig(abs_tol=root_tol, max_iter=200))


def solve_eta(p: EnvParams, fn_cfg: SpecialFnConfig = DEFAULT_SPECIAL,
              root_cfg: RootFindConfig = DEFAULT_ROOT) -> float:
    """eta for the SeparateManager regime; +inf when phi = 0."""
    if p.phi == 0.0:
        return math.inf
    return _eta_root(p.n, p.phi, p.delta, fn_cfg.quadrature_abs_tol,
                     fn_cfg.tail_truncation, fn_cfg.max_subdivisions,
                     root_cfg.abs_tol)


def eta_gap(n: int, phi: float, delta: float,
            fn_cfg: SpecialFnConfig = DEFAULT_SPECIAL) -> float:
    """Gap between eta's upper bracket n p_n delta/(phi (1-delta)) and eta.

    A diagnostic only: it is recorded, never asserted, and vanishes as
    the erfc-power integral saturates.
    """
    if phi <= 0:
        raise ValueError("eta_gap requires phi > 0")
    eta = _eta_root(n, phi, delta, fn_cfg.quadrature_abs_tol,
                    fn_cfg.tail_truncation, fn_cfg.max_subdivisions,
                    DEFAULT_ROOT.abs_tol)
    return n * compute_p_n(n, fn_cfg) * delta / (phi * (1.0 - delta)) - eta


# ---------------------------------------------------------------------------
# regime solvers
# ---------------------------------------------------------------------------

def _tournament_win_prob(n: int, z_threshold: float) -> float:
    """Per-worker win probability when all efforts are equal and the
    prize threshold sits z_threshold standard deviations below the mean."""
    f_at_threshold = erfc(z_threshold / math.sqrt(2.0)) / 2.0
    return (1.0 - f_at_threshold ** n) / n


def solve_observable_benchmark(
        p: EnvParams, c: CostFunction,
        fn_cfg: SpecialFnConfig = DEFAULT_SPECIAL,
        root_cfg: RootFindConfig = DEFAULT_ROOT) -> ContractSolution:
    """Owner-run tournament on individually observed performance.

    First best whenever the owner's promise is credible:
        sigma c'(e)/(n p_n) <= (delta/(1-delta)) (e - c(e) - u_bar);
    otherwise effort is the largest root of that relation at equality.
    The prize sigma c'(e*)/p_n with threshold e* implements e*.
    """
    e_fb = c.first_best()
    dr = p.delta_ratio

    if p.sigma == 0.0:
        if e_fb - c.c(e_fb) - p.u_bar < 0:
            return _no_root(REGIME_OBSERVABLE)
        e_star, branch, prize = e_fb, BRANCH_FIRST_BEST, 0.0
    else:
        pn = compute_p_n(p.n, fn_cfg)

        def slack(e):
            return dr * (e - c.c(e) - p.u_bar) - p.sigma * c.c1(e) / (p.n * pn)

        if slack(e_fb) >= 0.0:
            e_star, branch = e_fb, BRANCH_FIRST_BEST
        else:
            root = _largest_root(slack, 0.0, _effort_upper(c), root_cfg)
            if root is None or root <= root_cfg.abs_tol:
                return _no_root(REGIME_OBSERVABLE)
            e_star, branch = root, BRANCH_BINDING
        prize = p.sigma * c.c1(e_star) / pn

    owner = p.n * (e_star - c.c(e_star) - p.u_bar)
    win = (1.0 - 0.5 ** p.n) / p.n
    alpha_i = p.u_bar + c.c(e_star) - prize * win
    scheme = BonusScheme(VARIANT_TOURNAMENT, alpha_i=alpha_i,
                         threshold=e_star, prize=prize)
    return ContractSolution(
        regime=REGIME_OBSERVABLE, branch=branch, feasible=owner >= 0.0,
        effort=e_star, scheme=scheme, alpha_t=p.n * alpha_i,
        owner_profit=owner, manager_profit=0.0, worker_profit=0.0,
        surplus=owner, destroyed_surplus=0.0)


def solve_equal_bonus(
        p: EnvParams, c: CostFunction,
        fn_cfg: SpecialFnConfig = DEFAULT_SPECIAL,
        root_cfg: RootFindConfig = DEFAULT_ROOT) -> ContractSolution:
    """Equal split of a team bonus on a total-output trigger, no manager.

    Worker incentives pin the per-worker bonus at
        b = sigma sqrt(2 pi n) c'(e*),
    and the owner's promise of n b is credible iff
        sigma sqrt(2 pi n) c'(e) <= (delta/(1-delta)) (e - c(e) - u_bar).
    First best while that holds at c'(e) = 1, else the largest root of
    the equality. The trigger sits at expected team output n e*, so the
    bonus pays with probability one half.
    """
    e_fb = c.first_best()
    dr = p.delta_ratio
    width = math.sqrt(2.0 * math.pi * p.n)

    if p.sigma == 0.0:
        if e_fb - c.c(e_fb) - p.u_bar < 0:
            return _no_root(REGIME_EQUAL)
        e_star, branch = e_fb, BRANCH_FIRST_BEST
    else:
        def slack(e):
            return dr * (e - c.c(e) - p.u_bar) - p.sigma * width * c.c1(e)

        if slack(e_fb) >= 0.0:
            e_star, branch = e_fb, BRANCH_FIRST_BEST
        else:
            root = _largest_root(slack, 0.0, _effort_upper(c), root_cfg)
            if root is None or root <= root_cfg.abs_tol:
                return _no_root(REGIME_EQUAL)
            e_star, branch = root, BRANCH_BINDING

    bonus = p.sigma * width * c.c1(e_star)
    owner = p.n * (e_star - c.c(e_star) - p.u_bar)
    alpha_i = p.u_bar + c.c(e_star) - bonus / 2.0
    scheme = BonusScheme(VARIANT_EQUAL_SPLIT, alpha_i=alpha_i,
                         per_worker_bonus=bonus, team_trigger=p.n * e_star)
    return ContractSolution(
        regime=REGIME_EQUAL, branch=branch, feasible=owner >= 0.0,
        effort=e_star, scheme=scheme, alpha_t=p.n * alpha_i,
        owner_profit=owner, manager_profit=0.0, worker_profit=0.0,
        surplus=owner, destroyed_surplus=0.0)


def solve_integrated(
        p: EnvParams, c: CostFunction,
        fn_cfg: SpecialFnConfig = DEFAULT_SPECIAL,
        root_cfg: RootFindConfig = DEFAULT_ROOT) -> ContractSolution:
    """Manager hired and paid through a team-trigger bonus pot.

    The manager runs a threshold tournament among the workers (threshold
    e*, prize (delta/(1-delta)) k0) and keeps the rent
        k0 = (1-delta) c'(e*) sigma / (delta p_n)
    that makes the prize promise credible. Interior effort solves
        (sigma (1-delta)/delta) c''(e)/(n p_n) = 1 - c'(e);
    if the owner's own promise-keeping bound
        c'(e) sigma (sqrt(2 pi / n) + 1/(n p_n))
            <= (delta/(1-delta)) (e - c(e) - u_bar - u0_bar/n)
    fails at that root, effort drops to the largest root of the bound at
    equality.
    """
    e_fb = c.first_best()
    dr = p.delta_ratio

    if p.sigma == 0.0:
        e_star, branch = e_fb, BRANCH_FIRST_BEST
        k0, prize, b0 = 0.0, 0.0, 0.0
    else:
        pn = compute_p_n(p.n, fn_cfg)
        shadow = p.sigma / dr          # sigma (1-delta)/delta

        def interior(e):
            return (1.0 - c.c1(e)) - shadow * c.c2(e) / (p.n * pn)

        def sub_slack(e):
            need = c.c1(e) * p.sigma * (math.sqrt(2.0 * math.pi / p.n)
                                        + 1.0 / (p.n * pn))
            return dr * (e - c.c(e) - p.u_bar - p.u0_bar / p.n) - need

        e_int = _largest_root(interior, 0.0, e_fb, root_cfg)
        if e_int is not None and e_int > root_cfg.abs_tol \
                and sub_slack(e_int) >= 0.0:
            e_star, branch = e_int, BRANCH_INTERIOR
        else:
            root = _largest_root(sub_slack, 0.0, _effort_upper(c), root_cfg)
            if root is None or root <= root_cfg.abs_tol:
                return _no_root(REGIME_INTEGRATED)
            e_star, branch = root, BRANCH_BINDING

        k0 = (1.0 - p.delta) * c.c1(e_star) * p.sigma / (p.delta * pn)
        prize = dr * k0
        b0 = p.sigma * math.sqrt(2.0 * math.pi * p.n) * c.c1(e_star)

    owner = p.n * e_star - p.n * c.c(e_star) - p.n * p.u_bar - p.u0_bar - k0
    win = (1.0 - 0.5 ** p.n) / p.n
    alpha_i = p.u_bar + c.c(e_star) - prize * win
    alpha_0 = k0 + p.n * c.c(e_star) + p.u0_bar + p.n * p.u_bar - b0 / 2.0
    scheme = BonusScheme(VARIANT_TOURNAMENT, alpha_i=alpha_i,
                         threshold=e_star, prize=prize)
    return ContractSolution(
        regime=REGIME_INTEGRATED, branch=branch, feasible=owner >= 0.0,
        effort=e_star, scheme=scheme, alpha_t=p.n * alpha_i, alpha_0=alpha_0,
        k0=k0, owner_prize_B0=b0, owner_profit=owner, manager_profit=k0,
        worker_profit=0.0, surplus=owner + k0, destroyed_surplus=0.0)


def solve_separate(
        p: EnvParams, c: CostFunction,
        fn_cfg: SpecialFnConfig = DEFAULT_SPECIAL,
        root_cfg: RootFindConfig = DEFAULT_ROOT) -> ContractSolution:
    """Manager on a flat salary; the worker bonus pot b_t is destroyed
    when nobody clears the threshold e* - sigma eta.

    eta solves 2^n (n p_n - eta phi (1-delta)/delta)
               = int_0^eta erfc(w/sqrt(2))^n dw   (phi > 0),
    and effort solves (sigma/eta) c''(e) = 1 - c'(e). At phi = 0 the
    collusion temptation vanishes, the threshold drops to -inf and the
    first best obtains for any sigma. The worker bonus is
        b_t = sigma c'(e*) / (p_n + rho_n(eta)),
    the manager is paid alpha_m = u0_bar + phi (1-delta) b_t / delta to
    keep collusion unattractive, and the expected destruction
        b_t erfc(eta/sqrt(2))^n / 2^n
    is the price of decoupling his pay from the pot.
    """
    e_fb = c.first_best()
    dr = p.delta_ratio
    eta = solve_eta(p, fn_cfg, root_cfg)

    if p.sigma == 0.0:
        e_star, branch = e_fb, BRANCH_FIRST_BEST
        b_t, destroyed, mgr = 0.0, 0.0, 0.0
        destr_prob = 0.0
        threshold = e_fb
    elif p.phi == 0.0:
        e_star, branch = e_fb, BRANCH_THRESHOLD_MINUS_INF
        pr = compute_p_n(p.n, fn_cfg) + compute_rho_n(p.n, math.inf, fn_cfg)
        b_t = p.sigma * c.c1(e_star) / pr
        destr_prob, destroyed, mgr = 0.0, 0.0, 0.0
        threshold = -math.inf
    else:
        def interior(e):
            return (1.0 - c.c1(e)) - (p.sigma / eta) * c.c2(e)

        root = _largest_root(interior, 0.0, e_fb, root_cfg)
        if root is None or root <= root_cfg.abs_tol:
            return _no_root(REGIME_SEPARATE)
        e_star, branch = root, BRANCH_INTERIOR
        pr = compute_p_n(p.n, fn_cfg) + compute_rho_n(p.n, eta, fn_cfg)
        b_t = p.sigma * c.c1(e_star) / pr
        destr_prob = erfc(eta / math.sqrt(2.0)) ** p.n / 2.0 ** p.n
        destroyed = b_t * destr_prob
        mgr = p.phi * (1.0 - p.delta) * b_t / p.delta
        threshold = e_star - p.sigma * eta

    alpha_t = p.n * c.c(e_star) + p.n * p.u_bar - b_t * (1.0 - destr_prob)
    alpha_m = p.u0_bar + mgr
    owner = (p.n * e_star - p.n * c.c(e_star) - p.n * p.u_bar - p.u0_bar
             - mgr - destroyed)
    scheme = BonusScheme(VARIANT_TOURNAMENT, alpha_i=alpha_t / p.n,
                         threshold=threshold, prize=b_t)
    return ContractSolution(
        regime=REGIME_SEPARATE, branch=branch, feasible=owner >= 0.0,
        effort=e_star, scheme=scheme, eta=eta, b_t=b_t, alpha_t=alpha_t,
        alpha_m=alpha_m, owner_profit=owner, manager_profit=mgr,
        worker_profit=0.0, surplus=owner + mgr + destroyed,
        destroyed_surplus=destroyed)


_SOLVERS = {
    REGIME_OBSERVABLE: solve_observable_benchmark,
    REGIME_EQUAL: solve_equal_bonus,
    REGIME_INTEGRATED: solve_integrated,
    REGIME_SEPARATE: solve_separate,
}


def solve_regime(regime: str, p: EnvParams, c: CostFunction,
                 fn_cfg: SpecialFnConfig = DEFAULT_SPECIAL,
                 root_cfg: RootFindConfig = DEFAULT_ROOT) -> ContractSolution:
    """Dispatch to the named regime's solver."""
    try:
        solver = _SOLVERS[regime]
    except KeyError:
        raise ValueError("unknown regime %r" % (regime,)) from None
    return solver(p, c, fn_cfg, root_cfg)


# ---------------------------------------------------------------------------
# accessors
# ---------------------------------------------------------------------------

def _require_feasible(sol: ContractSolution) -> None:
    if not sol.feasible:
        raise InfeasibleSolutionError(
            "%s solution is infeasible (branch %s)" % (sol.regime, sol.branch))


def owner_profit_of(sol: ContractSolution) -> float:
    """Owner per-period profit; raises on infeasible solutions."""
    _require_feasible(sol)
    return sol.owner_profit


def manager_profit_of(sol: ContractSolution) -> float:
    """Manager per-period rent; zero in regimes without a manager."""
    _require_feasible(sol)
    return sol.manager_profit


def surplus_of(sol: ContractSolution) -> float:
    """Total per-period surplus net of all outside options."""
    _require_feasible(sol)
    return sol.surplus
