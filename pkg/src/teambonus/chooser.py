"""Parameter sweeps, best-regime maps, crossovers, and feasibility bounds.

Everything here drives the contracts-module solvers across grids: sweeps
tabulate one regime per row while a parameter varies, region maps color
each cell by the owner's best feasible regime, crossover locates the
parameter value where two regimes' owner profits cross, and
sigma_star_equal / compute_U_n give the equal-bonus feasibility edge and
the delegated regime's value at that edge (the quantities that organize
the regime map).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import List, Optional, Tuple

import numpy as np
from scipy import optimize as _optimize

from .contracts import (
    ALL_REGIMES,
    ContractSolution,
    CostFunction,
    EnvParams,
    REGIME_EQUAL,
    REGIME_INTEGRATED,
    REGIME_SEPARATE,
    solve_regime,
    solve_separate,
)
from .numerics import (
    DEFAULT_ROOT,
    DEFAULT_SPECIAL,
    NoSignChangeError,
    RootFindConfig,
    SpecialFnConfig,
)

REGIME_CODES = {
    "Infeasible": 0,
    REGIME_EQUAL: 1,
    REGIME_INTEGRATED: 2,
    REGIME_SEPARATE: 3,
}

_VARY_FIELDS = {
    "sigma": "sigma",
    "delta": "delta",
    "phi": "phi",
    "u0": "u0_bar",
    "u0_bar": "u0_bar",
    "n": "n",
}


def _with_param(base: EnvParams, name: str, value: float) -> EnvParams:
    try:
        field_name = _VARY_FIELDS[name]
    except KeyError:
        raise ValueError("cannot vary %r; choose one of %s"
                         % (name, sorted(set(_VARY_FIELDS)))) from None
    if field_name == "n":
        value = int(round(value))
    return replace(base, **{field_name: value})


# ---------------------------------------------------------------------------
# sweeps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SweepSpec:
    """One-parameter sweep request.

    vary is one of sigma, delta, phi, u0_bar (alias u0), n; start/stop
    bound the grid (CLI flags --from/--to land here) and steps is the
    number of grid points. regimes defaults to all four. Grids over n
    are rounded to integers and de-duplicated.
    """

    base: EnvParams
    cost: CostFunction
    vary: str
    start: float
    stop: float
    steps: int
    regimes: Tuple[str, ...] = ALL_REGIMES

    def __post_init__(self):
        if self.vary not in _VARY_FIELDS:
            raise ValueError("unknown sweep parameter %r" % (self.vary,))
        if not self.start < self.stop:
            raise ValueError("sweep needs start < stop")
        if self.steps < 2:
            raise ValueError("sweep needs at least 2 steps")
        for r in self.regimes:
            if r not in ALL_REGIMES:
                raise ValueError("unknown regime %r" % (r,))
        # fail early if an endpoint leaves the parameter domain
        _with_param(self.base, self.vary, self.start)
        _with_param(self.base, self.vary, self.stop)

    def grid(self) -> Tuple[float, ...]:
        vals = np.linspace(self.start, self.stop, self.steps)
        if _VARY_FIELDS[self.vary] == "n":
            seen: List[float] = []
            for v in vals:
                iv = int(round(v))
                if not seen or seen[-1] != iv:
                    seen.append(iv)
            return tuple(float(v) for v in seen)
        return tuple(float(v) for v in vals)


@dataclass(frozen=True)
class SweepRow:
    """One regime at one grid point, per-worker units for the profits."""

    regime: str
    vary_name: str
    vary_value: float
    branch: str
    effort: Optional[float]
    surplus_pw: Optional[float]
    owner_pw: Optional[float]
    manager_pw: Optional[float]
    feasible: bool


def sweep_solutions(spec: SweepSpec,
                    fn_cfg: SpecialFnConfig = DEFAULT_SPECIAL,
                    root_cfg: RootFindConfig = DEFAULT_ROOT,
                    ) -> List[Tuple[float, str, ContractSolution]]:
    """Full solutions behind sweep(); (vary_value, regime, solution)."""
    out = []
    for v in spec.grid():
        p = _with_param(spec.base, spec.vary, v)
        for regime in spec.regimes:
            out.append((v, regime, solve_regime(regime, p, spec.cost,
                                                fn_cfg, root_cfg)))
    return out


def sweep(spec: SweepSpec,
          fn_cfg: SpecialFnConfig = DEFAULT_SPECIAL,
          root_cfg: RootFindConfig = DEFAULT_ROOT) -> List[SweepRow]:
    """Tabulate the requested regimes along the grid.

    Infeasible cells become flagged rows (feasible=False, numeric fields
    None when no root exists); the sweep itself never raises on them.
    """
    n = spec.base.n
    rows = []
    for v, regime, sol in sweep_solutions(spec, fn_cfg, root_cfg):
        n_here = int(round(v)) if _VARY_FIELDS[spec.vary] == "n" else n
        rows.append(SweepRow(
            regime=regime, vary_name=spec.vary, vary_value=v,
            branch=sol.branch, effort=sol.effort,
            surplus_pw=None if sol.surplus is None else sol.surplus / n_here,
            owner_pw=None if sol.owner_profit is None
            else sol.owner_profit / n_here,
            manager_pw=None if sol.manager_profit is None
            else sol.manager_profit / n_here,
            feasible=sol.feasible))
    return rows


# ---------------------------------------------------------------------------
# best-regime selection and maps
# ---------------------------------------------------------------------------

_COMPETING = (REGIME_EQUAL, REGIME_INTEGRATED, REGIME_SEPARATE)


def choose_best(p: EnvParams, c: CostFunction,
                fn_cfg: SpecialFnConfig = DEFAULT_SPECIAL,
                root_cfg: RootFindConfig = DEFAULT_ROOT,
                ) -> Tuple[int, Optional[ContractSolution]]:
    """Owner's best regime when individual performance is not contractible.

    Only the three unobservable-performance regimes compete. Returns
    (regime code, solution); code 0 and None when nothing is feasible.
    Exact profit ties break toward the earlier code (EqualBonus, then
    IntegratedManager, then SeparateManager).
    """
    best_code, best_sol = 0, None
    best_profit = -math.inf
    for regime in _COMPETING:
        sol = solve_regime(regime, p, c, fn_cfg, root_cfg)
        if sol.feasible and sol.owner_profit > best_profit:
            best_code = REGIME_CODES[regime]
            best_sol = sol
            best_profit = sol.owner_profit
    return best_code, best_sol


@dataclass(frozen=True)
class RegionMap:
    """Best-regime codes and owner profits over a 2-parameter grid.

    codes[i, j] corresponds to axis1_grid[i], axis2_grid[j]; 0 marks an
    infeasible cell and owner_profit holds nan there.
    """

    axis1_name: str
    axis2_name: str
    axis1_grid: Tuple[float, ...]
    axis2_grid: Tuple[float, ...]
    codes: np.ndarray
    owner_profit: np.ndarray


AxisSpec = Tuple[str, float, float, int]


def _axis_grid(axis: AxisSpec) -> Tuple[str, Tuple[float, ...]]:
    name, start, stop, steps = axis
    if name not in _VARY_FIELDS:
        raise ValueError("unknown axis parameter %r" % (name,))
    if not (start < stop and steps >= 2):
        raise ValueError("axis needs start < stop and steps >= 2")
    return name, tuple(float(v) for v in np.linspace(start, stop, steps))


def region_map(axis1: AxisSpec, axis2: AxisSpec, base: EnvParams,
               c: CostFunction,
               fn_cfg: SpecialFnConfig = DEFAULT_SPECIAL,
               root_cfg: RootFindConfig = DEFAULT_ROOT) -> RegionMap:
    """Fill a grid with choose_best codes and the winning owner profit."""
    name1, grid1 = _axis_grid(axis1)
    name2, grid2 = _axis_grid(axis2)
    codes = np.zeros((len(grid1), len(grid2)), dtype=int)
    profit = np.full((len(grid1), len(grid2)), math.nan)
    for i, v1 in enumerate(grid1):
        p1 = _with_param(base, name1, v1)
        for j, v2 in enumerate(grid2):
            p = _with_param(p1, name2, v2)
            code, sol = choose_best(p, c, fn_cfg, root_cfg)
            codes[i, j] = code
            if sol is not None:
                profit[i, j] = sol.owner_profit
    return RegionMap(axis1_name=name1, axis2_name=name2,
                     axis1_grid=grid1, axis2_grid=grid2,
                     codes=codes, owner_profit=profit)


# ---------------------------------------------------------------------------
# crossovers and the equal-bonus feasibility edge
# ---------------------------------------------------------------------------

def crossover(vary: str, regime_a: str, regime_b: str, base: EnvParams,
              c: CostFunction, bracket: Tuple[float, float],
              tol: float = 1e-6,
              fn_cfg: SpecialFnConfig = DEFAULT_SPECIAL,
              root_cfg: RootFindConfig = DEFAULT_ROOT) -> float:
    """Parameter value where two regimes' owner profits cross.

    Bisection on the profit difference down to tol; an infeasible regime
    counts as owner profit -inf, so the crossing into infeasibility is
    also locatable. Raises NoSignChangeError when the difference keeps
    its sign on the bracket, ValueError when both regimes are infeasible
    at a probed point or the regimes are identical.
    """
    if regime_a == regime_b:
        raise ValueError("crossover needs two distinct regimes")
    lo, hi = bracket
    if not lo < hi:
        raise ValueError("bracket needs lo < hi")

    def diff(x):
        p = _with_param(base, vary, x)
        sa = solve_regime(regime_a, p, c, fn_cfg, root_cfg)
        sb = solve_regime(regime_b, p, c, fn_cfg, root_cfg)
        va = sa.owner_profit if sa.feasible else -math.inf
        vb = sb.owner_profit if sb.feasible else -math.inf
        if math.isinf(va) and math.isinf(vb):
            raise ValueError("both regimes infeasible at %s=%g" % (vary, x))
        return va - vb

    f_lo, f_hi = diff(lo), diff(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo > 0) == (f_hi > 0):
        raise NoSignChangeError(
            "owner-profit difference does not change sign on [%g, %g]"
            % (lo, hi))
    for _ in range(200):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        f_mid = diff(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
    return 0.5 * (lo + hi)


def sigma_star_equal(n: int, delta: float, u_bar: float,
                     c: CostFunction) -> float:
    """Largest sigma at which the equal-bonus regime stays feasible.

    max over e > 0 of delta (e - c(e) - u_bar) / ((1-delta) sqrt(2 pi n)
    c'(e)). Grid scan plus a bounded local polish; raises ValueError when
    u_bar exceeds first-best surplus per worker (no contract can pay the
    outside option), returns 0 exactly at the boundary.
    """
    e_fb = c.first_best()
    s_fb = e_fb - c.c(e_fb) - u_bar
    if s_fb < 0:
        raise ValueError("u_bar exceeds first-best surplus per worker")
    if s_fb == 0:
        return 0.0
    dr = delta / (1.0 - delta)
    width = math.sqrt(2.0 * math.pi * n)

    # upper end: surplus returns to zero beyond the first best
    hi = e_fb
    while hi - c.c(hi) - u_bar > 0:
        hi *= 2.0
        if hi > 1e12:
            raise RuntimeError("no upper feasibility point found")

    def ratio(e):
        return dr * (e - c.c(e) - u_bar) / (width * c.c1(e))

    grid = np.linspace(hi * 1e-9, hi, 400)
    vals = [ratio(e) for e in grid]
    k = int(np.argmax(vals))
    lo_e = grid[max(0, k - 2)]
    hi_e = grid[min(len(grid) - 1, k + 2)]
    res = _optimize.minimize_scalar(lambda e: -ratio(e),
                                    bounds=(lo_e, hi_e), method="bounded",
                                    options={"xatol": 1e-12})
    return float(max(-res.fun, max(vals)))


def compute_U_n(phi: float, n: int, delta: float, u_bar: float,
                c: CostFunction,
                fn_cfg: SpecialFnConfig = DEFAULT_SPECIAL,
                root_cfg: RootFindConfig = DEFAULT_ROOT) -> float:
    """Delegated-regime owner profit at the equal-bonus edge, before the
    manager's outside option is deducted.

    Evaluated at sigma = sigma_star_equal with u0_bar = 0 so the value
    can be compared directly against a candidate u0_bar: the delegated
    regime outlives the equal bonus exactly when u0_bar stays below this
    number. Nonincreasing in phi.
    """
    sigma_star = sigma_star_equal(n, delta, u_bar, c)
    p = EnvParams(n=n, sigma=sigma_star, delta=delta, u_bar=u_bar,
                  u0_bar=0.0, phi=phi)
    sol = solve_separate(p, c, fn_cfg, root_cfg)
    if sol.effort is None:
        raise RuntimeError(
            "delegated regime has no interior solution at sigma=%g"
            % sigma_star)
    return sol.owner_profit
