#!/usr/bin/env python3
"""Solve all four regimes at one parameter point and show the ledger.

Usage: compare_regimes.py [sigma] (default 0.2)
"""
import sys

from teambonus import CostFunction, EnvParams, solve_regime
from teambonus.contracts import ALL_REGIMES
from teambonus.oracle import check_no_reneging


def main():
    sigma = float(sys.argv[1]) if len(sys.argv) > 1 else 0.2
    p = EnvParams(n=6, sigma=sigma, delta=0.7, u_bar=0.1, u0_bar=0.1,
                  phi=1.0)
    cost = CostFunction.from_string("quadratic:1")
    print("n=%d sigma=%g delta=%g u=%g u0=%g phi=%g"
          % (p.n, p.sigma, p.delta, p.u_bar, p.u0_bar, p.phi))
    print()
    for regime in ALL_REGIMES:
        sol = solve_regime(regime, p, cost)
        if not sol.feasible:
            print("%-20s infeasible" % regime)
            continue
        rep = check_no_reneging(sol, p)
        print("%-20s branch=%-22s e*=%.6f owner=%.6f manager=%s"
              % (regime, sol.branch, sol.effort, sol.owner_profit,
                 "%.6f" % sol.manager_profit
                 if sol.manager_profit is not None else "-"))
        print("%-20s   surplus=%.6f destroyed=%.3g slack(owner)=%.3g"
              % ("", sol.surplus, sol.destroyed_surplus or 0.0,
                 rep.owner_slack))


if __name__ == "__main__":
    main()
