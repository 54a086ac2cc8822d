#!/usr/bin/env python3
"""Print the tournament constants the solvers are built on.

p_n falls with n while n p_n rises, and p_n sqrt(2 pi n) peaks at n=5,
which is why the binding-branch owner/manager split is most owner-
favorable for five workers. rho_n(eta) shows how fast a lowered
threshold stops mattering.
"""
import math

from teambonus import compute_p_n
from teambonus.numerics import compute_rho_n


def main():
    print("n    p_n          n p_n        p_n sqrt(2 pi n)")
    for n in range(1, 16):
        p = compute_p_n(n)
        print("%-4d %.9f  %.9f  %.9f"
              % (n, p, n * p, p * math.sqrt(2 * math.pi * n)))

    print()
    print("eta      " + "".join("rho_%d(eta)    " % n for n in (2, 3, 6, 10)))
    for eta in (0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 5.0):
        row = "".join("%+.9f  " % compute_rho_n(n, eta)
                      for n in (2, 3, 6, 10))
        print("%-8.2f %s" % (eta, row))
    print()
    print("rho_n(eta) -> rho_n(inf), and p_n + rho_n stays positive: the")
    print("marginal effect of effort on winning never changes sign.")


if __name__ == "__main__":
    main()
