"""Self-enforcing team bonus contracts under normal performance noise.

Solvers for four bonus regimes (observable benchmark, equal bonus,
integrated manager bonus, delegated manager bonus), verification oracles
(quadrature and Monte Carlo), parameter sweeps and best-regime maps, and
a CLI that serializes everything as JSON/CSV.
"""

from .numerics import (
    SpecialFnConfig,
    RootFindConfig,
    NoSignChangeError,
    ConvergenceError,
    erfc,
    inv_erfc,
    compute_p_n,
    compute_p_n_limit,
    compute_rho_n,
    integral_erfc_pow,
    find_root_bracketed,
)
from .contracts import (
    EnvParams,
    CostFunction,
    BonusScheme,
    ContractSolution,
    InfeasibleSolutionError,
    REGIME_OBSERVABLE,
    REGIME_EQUAL,
    REGIME_INTEGRATED,
    REGIME_SEPARATE,
    solve_observable_benchmark,
    solve_equal_bonus,
    solve_integrated,
    solve_separate,
    solve_regime,
    owner_profit_of,
    manager_profit_of,
    surplus_of,
    eta_gap,
)
from .oracle import (
    LocationFamily,
    McConfig,
    tournament_marginal,
    team_win_marginal,
    mc_best_response,
    check_no_reneging,
    check_shift_invariance_sep,
)
from .chooser import (
    SweepSpec,
    RegionMap,
    REGIME_CODES,
    sweep,
    choose_best,
    region_map,
    crossover,
    sigma_star_equal,
    compute_U_n,
)

__version__ = "0.1.0"
