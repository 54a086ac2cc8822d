#!/usr/bin/env python3
"""Coarse text rendering of the best-regime map over (sigma, u0).

. infeasible   e EqualBonus   I IntegratedManager   S SeparateManager

The integrated pocket sits at small u0 just past the equal-bonus band;
the separate manager owns the deep-noise frontier until u0 crosses the
delegation value U_n(phi).
"""
from teambonus import CostFunction, EnvParams, compute_U_n, region_map

GLYPH = {0: ".", 1: "e", 2: "I", 3: "S"}


def main():
    base = EnvParams(n=6, sigma=0.1, delta=0.7, u_bar=0.1, phi=1.0)
    cost = CostFunction.from_string("quadratic:1")
    rm = region_map(("sigma", 0.005, 1.6, 48), ("u0", 0.0, 1.9, 24),
                    base, cost)
    print(__doc__)
    print("U_6(1) = %.4f" % compute_U_n(1.0, 6, 0.7, 0.1, cost))
    print()
    for j in range(len(rm.axis2_grid) - 1, -1, -1):
        line = "".join(GLYPH[int(c)] for c in rm.codes[:, j])
        print("u0=%-5.2f %s" % (rm.axis2_grid[j], line))
    print("         sigma %.3f .. %.1f" % (rm.axis1_grid[0],
                                           rm.axis1_grid[-1]))


if __name__ == "__main__":
    main()
