"""Exact vs asymptotic new-species estimates with 95% intervals, both libraries.

Usage: python scripts/scaling_comparison.py [--draws N] [--seed S]
"""

import argparse

from discovery import PdParams, bnp_discovery, credible_interval, load_naegleria, make_rng
from discovery.intervals import ZPosteriorSampler, asymptotic_estimate, sample_Z_posterior

REFERENCE_PARAMS = {"aerobic": PdParams(0.669, 46.241), "anaerobic": PdParams(0.656, 155.408)}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--draws", type=int, default=100_000)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    print("library,m,exact,naive,naive_lo,naive_hi,rstar,rstar_lo,rstar_hi")
    for lib, p in REFERENCE_PARAMS.items():
        s = load_naegleria(lib)
        z = sample_Z_posterior(ZPosteriorSampler(p, s.n, s.k, make_rng(args.seed)), args.draws)
        for mult in (1, 10, 100):
            m = mult * s.n
            exact = bnp_discovery(p, s, m, 0).value
            naive = asymptotic_estimate(p, s, m, 0, "naive").value
            ci_n = credible_interval(p, s, m, 0, scaling="naive", z_draws=z)
            rstar = asymptotic_estimate(p, s, m, 0, "rstar").value
            ci_r = credible_interval(p, s, m, 0, scaling="rstar", z_draws=z)
            print(f"{lib},{mult}n,{exact:.3f},{naive:.3f},{ci_n.lo:.3f},{ci_n.hi:.3f},{rstar:.3f},{ci_r.lo:.3f},{ci_r.hi:.3f}")


if __name__ == "__main__":
    main()
