#!/usr/bin/env python3
"""The two-limit memory phenomenon for a recurrent parameter pair.

Emits two CSVs: the lag decay Cov(X(t), X(t+D)) at fixed t (polynomial,
exponent -(1+b/a)) and the start-time decay at fixed lag (converging to the
exponential OU autocovariance).  The same process looks long-memory in one
limit order and short-memory in the other.

Usage: python scripts/long_memory_curves.py [a b sigma]
"""

import sys

import numpy as np

from avgsfde import Params, covariance, ct_limit, decay_fit, limiting_acf

if __name__ == "__main__":
    a, b, sigma = (float(v) for v in sys.argv[1:4]) if len(sys.argv) > 3 else (-1.0, 0.5, 1.0)
    p = Params(a=a, b=b, sigma=sigma)
    t0 = 1.0

    with open("lag_decay.csv", "w") as fh:
        fh.write("# avg-sfde v1 acf\ndelta,cov,cov_delta_pow\n")
        for d in np.geomspace(1.0, 1e4, 41):
            c = covariance(p, t0, float(d))
            fh.write(f"{d!r},{c!r},{c * d ** (1.0 + b / a)!r}\n")
    fit = decay_fit(p, t0, 50.0, 5000.0, 24)
    print(f"lag decay: slope {fit.fitted_exponent:.4f} "
          f"(theory {fit.theoretical_exponent:.4f}), c_t {fit.c_t_quadrature:.6g}")

    with open("start_time_decay.csv", "w") as fh:
        fh.write("# avg-sfde v1 acf\nt,cov,limiting\n")
        lim = limiting_acf(p, 1.0)
        for t in np.geomspace(2.0, 2e3, 25):
            c = covariance(p, float(t), 1.0)
            fh.write(f"{t!r},{c!r},{lim!r}\n")
    print(f"fixed-lag limit {lim:.6g}; c_t(1) = {ct_limit(p, t0):.6g}")
    print("wrote lag_decay.csv, start_time_decay.csv")
