"""Zeta(s) simulation study comparing the (0; l)-discovery estimators.

Draws R samples, fits (sigma, theta) by empirical Bayes on each, and reports
per-estimator SSE quantiles over all replicates. The per-sample layout with
five representative samples is available through ``discovery simulate``.

Usage: python scripts/zeta_simulation.py [--replicates R] [--n N] [--s S] [--seed SEED]
"""

import argparse
import warnings

import numpy as np

from discovery import discovery_profile, fit_empirical_bayes, make_rng, sse, zeta_sample
from discovery.zeta import true_discovery_profile

NAMES = ("bnp", "gt", "poisson-smooth", "pd-smooth", "sgt")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--replicates", type=int, default=500)
    ap.add_argument("--n", type=int, default=1000)
    ap.add_argument("--s", type=float, default=1.5)
    ap.add_argument("--seed", type=int, default=2015)
    args = ap.parse_args()
    out = {k: [] for k in NAMES}
    ks = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for r in range(args.replicates):
            s, pop = zeta_sample(args.s, args.n, make_rng(args.seed, r))
            p = fit_empirical_bayes(s).params
            truth = true_discovery_profile(pop, s)
            ks.append(s.k)
            for k in NAMES:
                out[k].append(sse(discovery_profile(k, s, p), truth, n=s.n))
    print(f"k_n quantiles (5%, 50%, 95%): {np.quantile(ks, [0.05, 0.5, 0.95])}")
    print("estimator,sse_q05,sse_median,sse_q95")
    for k, v in out.items():
        q = np.quantile(v, [0.05, 0.5, 0.95])
        print(f"{k},{q[0]:.4f},{q[1]:.4f},{q[2]:.4f}")


if __name__ == "__main__":
    main()
