"""Single and cumulative discovery estimates with r*-scaled 95% intervals.

Usage: python scripts/interval_table.py [--draws N] [--seed S]
"""

import argparse

from discovery import PdParams, bnp_cumulative, credible_interval, load_naegleria, make_rng
from discovery.intervals import ZPosteriorSampler, sample_Z_posterior

REFERENCE_PARAMS = {"aerobic": PdParams(0.669, 46.241), "anaerobic": PdParams(0.656, 155.408)}
TARGETS = [(0,), (1,), (2,), (3,), (4,), (0, 1, 2, 3), (0, 1, 2, 3, 4), (0, 1, 2, 3, 4, 5)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--draws", type=int, default=100_000)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    print("target,library,m,estimate,lo,hi")
    for lib, p in REFERENCE_PARAMS.items():
        s = load_naegleria(lib)
        z = sample_Z_posterior(ZPosteriorSampler(p, s.n, s.k, make_rng(args.seed)), args.draws)
        for t in TARGETS:
            for mult in (1, 2, 3):
                m = mult * s.n
                v = bnp_cumulative(p, s, m, t).value
                ci = credible_interval(p, s, m, t if len(t) > 1 else t[0], z_draws=z)
                label = ";".join(map(str, t))
                print(f"{label},{lib},{mult}n,{v:.3f},{ci.lo:.3f},{ci.hi:.3f}")


if __name__ == "__main__":
    main()
