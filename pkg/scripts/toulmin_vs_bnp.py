"""Good-Toulmin vs Bayesian new-species curves for m in [0, n].

Writes one row per m with the Good-Toulmin value and the Bayesian estimate
with its r*-scaled 95% interval (one shared batch of Z draws).

Usage: python scripts/toulmin_vs_bnp.py [--library aerobic] [--points 41] [--draws N]
"""

import argparse

import numpy as np

from discovery import bnp_discovery, credible_interval, fit_empirical_bayes, good_toulmin, load_naegleria, make_rng
from discovery.intervals import ZPosteriorSampler, sample_Z_posterior


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--library", default="aerobic")
    ap.add_argument("--points", type=int, default=41)
    ap.add_argument("--draws", type=int, default=100_000)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    s = load_naegleria(args.library)
    p = fit_empirical_bayes(s).params
    z = sample_Z_posterior(ZPosteriorSampler(p, s.n, s.k, make_rng(args.seed)), args.draws)
    print("m,good_toulmin,unstable,bnp,bnp_lo,bnp_hi")
    for m in np.unique(np.linspace(0, s.n, args.points).round().astype(int)):
        gt = good_toulmin(s, int(m))
        v = bnp_discovery(p, s, int(m), 0).value
        ci = credible_interval(p, s, int(m), 0, z_draws=z)
        print(f"{m},{gt.value:.5f},{int(gt.unstable)},{v:.5f},{ci.lo:.5f},{ci.hi:.5f}")


if __name__ == "__main__":
    main()
