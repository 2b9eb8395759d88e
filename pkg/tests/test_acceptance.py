"""Acceptance suite: one test per criterion, each printing a single PASS/FAIL line."""

import math
import random
import subprocess
import sys
import time

import numpy as np
import pytest
from scipy import stats

from conftest import REFERENCE_PARAMS
from reference_values import INTERVAL_TABLE, SENSITIVITY
from discovery.estimators import (
    bnp_cumulative,
    bnp_discovery,
    bnp_discovery_via_identity,
    discovery_profile,
    expected_freq_count,
    expected_new_species,
    sse,
)
from discovery.intervals import (
    ZPosteriorSampler,
    asymptotic_estimate,
    credible_interval,
    exact_pmf_new_species,
    limit_coeff,
    mean_Z,
    r_star,
    sample_Z_posterior,
)
from discovery.pyp import PdParams, fit_empirical_bayes, simulate_continuations, simulate_sample
from discovery.rng import make_rng
from discovery.stable import sample_positive_stable, sample_tilted_stable
from discovery.summary import from_counts, load_naegleria
from discovery.zeta import true_discovery_profile, zeta_sample

pytestmark = pytest.mark.slow

SCALING_TABLE = {
    # library -> [(exact, naive) at m = n, 10n, 100n]
    "aerobic": [(0.289, 0.367), (0.165, 0.171), (0.080, 0.080)],
    "anaerobic": [(0.409, 0.533), (0.232, 0.241), (0.109, 0.109)],
}
TARGETS = {"0": (0,), "1": (1,), "2": (2,), "3": (3,), "4": (4,), "0-3": (0, 1, 2, 3), "0-4": (0, 1, 2, 3, 4), "0-5": (0, 1, 2, 3, 4, 5)}
M_MULT = {"n": 1, "10n": 10, "100n": 100}


def report(capsys, number, ok, detail):
    with capsys.disabled():
        print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, detail


def _target(t):
    return t if len(t) > 1 else t[0]


def test_criterion_01_fit(capsys):
    want = {"aerobic": (0.669, 46.241), "anaerobic": (0.656, 155.408)}
    misses, parts = [], []
    for lib, (sg, th) in want.items():
        s = load_naegleria(lib)
        t0 = time.perf_counter()
        res = fit_empirical_bayes(s)
        dt = time.perf_counter() - t0
        parts.append(f"{lib} ({res.sigma:.4f}, {res.theta:.3f}) in {dt:.2f}s")
        if abs(res.sigma - sg) > 0.005 or abs(res.theta - th) > 0.5 or dt >= 10.0:
            misses.append(lib)
    report(capsys, 1, not misses, "; ".join(parts))


def test_criterion_02_point_estimates(capsys):
    misses, worst = [], 0.0
    for lib, rows in SCALING_TABLE.items():
        s, p = load_naegleria(lib), REFERENCE_PARAMS[lib]
        for (exact, naive), mult in zip(rows, (1, 10, 100)):
            m = mult * s.n
            got = (bnp_discovery(p, s, m, 0).value, asymptotic_estimate(p, s, m, 0, "naive").value)
            for name, g, w in zip(("exact", "naive"), got, (exact, naive)):
                worst = max(worst, abs(g - w))
                if abs(g - w) > 0.0005:
                    misses.append(f"{lib} {name} m={mult}n got {g:.6f} want {w}")
    detail = f"12 cells, max |err| {worst:.6f}" + ("; misses: " + ", ".join(misses) if misses else "")
    report(capsys, 2, not misses, detail)


def test_criterion_03_interval_table(capsys):
    t0 = time.perf_counter()
    point_miss, iv_miss = [], []
    worst_pt = worst_iv = 0.0
    for lib in ("aerobic", "anaerobic"):
        s, p = load_naegleria(lib), REFERENCE_PARAMS[lib]
        z = sample_Z_posterior(ZPosteriorSampler(p, s.n, s.k, make_rng(2)), 100_000)
        for name, t in TARGETS.items():
            for mult, (e, lo, hi) in zip((1, 2, 3), INTERVAL_TABLE[(name, lib)]):
                m = mult * s.n
                v = bnp_cumulative(p, s, m, t).value
                ci = credible_interval(p, s, m, _target(t), z_draws=z)
                worst_pt = max(worst_pt, abs(v - e))
                worst_iv = max(worst_iv, abs(ci.lo - lo), abs(ci.hi - hi))
                if abs(v - e) > 0.001:
                    point_miss.append(f"{lib} {name} {mult}n")
                if abs(ci.lo - lo) > 0.004 or abs(ci.hi - hi) > 0.004:
                    iv_miss.append(f"{lib} {name} {mult}n")
    dt = time.perf_counter() - t0
    ok = not point_miss and not iv_miss and dt < 120
    detail = (f"48 points max |err| {worst_pt:.4f}, 48 intervals max |err| {worst_iv:.4f} at 1e5 draws, {dt:.1f}s"
              + ("; misses: " + ", ".join(point_miss + iv_miss) if point_miss or iv_miss else ""))
    report(capsys, 3, ok, detail)


def test_criterion_04_sensitivity(capsys):
    keys = sorted(SENSITIVITY)
    picked = random.Random(4).sample(keys, 12)
    misses, worst = [], 0.0
    for lib, tok, th, sg in picked:
        s, p = load_naegleria(lib), PdParams(sg, th)
        z = sample_Z_posterior(ZPosteriorSampler(p, s.n, s.k, make_rng(4)), 100_000)
        ci = credible_interval(p, s, M_MULT[tok] * s.n, 0, z_draws=z)
        lo, hi = SENSITIVITY[(lib, tok, th, sg)]
        err = max(abs(ci.lo - lo), abs(ci.hi - hi))
        worst = max(worst, err)
        if err > 0.004:
            misses.append(f"{lib} m={tok} sigma={sg} theta={th}")
    detail = f"{len(picked)} random cells, max |err| {worst:.4f}" + ("; misses: " + ", ".join(misses) if misses else "")
    report(capsys, 4, not misses, detail)


def test_criterion_05_identities(capsys):
    rng = np.random.default_rng(5)
    worst_id = worst_norm = 0.0
    grid_m = (0, 1, 10, 1000, 10**5, 10**7)
    for _ in range(200):
        k = int(rng.integers(1, 60))
        counts = rng.zipf(1.8, size=k)
        counts = np.minimum(counts, 500)
        s = from_counts(counts.tolist())
        p = PdParams(float(rng.uniform(0.02, 0.98)), float(rng.uniform(0.0, 500.0)))
        for m in grid_m:
            for l in {0, 1, 2, 5, 17, int(s.max_frequency), int(s.max_frequency) + 1}:
                if l > s.n + m:
                    continue
                a = bnp_discovery(p, s, m, l).value
                b = bnp_discovery_via_identity(p, s, m, l).value
                worst_id = max(worst_id, abs(a - b) / max(1.0, abs(a)))
        total = bnp_discovery(p, s, 0, 0).value + math.fsum(bnp_discovery(p, s, 0, l).value for l, _ in s.spectrum_items)
        worst_norm = max(worst_norm, abs(total - 1.0))
    ok = worst_id <= 1e-10 and worst_norm <= 1e-12
    report(capsys, 5, ok, f"200 summaries, identity max diff {worst_id:.2e}, normalization max diff {worst_norm:.2e}")


def test_criterion_06_samplers(capsys):
    draws = 10**6
    worst = 0.0
    for sigma in (0.3, 0.5, 0.8):
        for u in (0.0, 1.0, 10.0):
            x = sample_tilted_stable(sigma, u, make_rng(6), size=draws)
            for t in (0.5, 1.0, 2.0):
                y = np.exp(-t * x)
                target = math.exp(u**sigma - (u + t) ** sigma)
                worst = max(worst, abs(y.mean() - target) / (y.std(ddof=1) / math.sqrt(draws)))
    x = sample_positive_stable(0.5, make_rng(60), size=draws)
    ks_p = stats.kstest(x, stats.levy(scale=0.5).cdf).pvalue
    worst_mean = 0.0
    for lib, p in REFERENCE_PARAMS.items():
        s = load_naegleria(lib)
        z = sample_Z_posterior(ZPosteriorSampler(p, s.n, s.k, make_rng(61)), draws)
        worst_mean = max(worst_mean, abs(z.mean() - mean_Z(p, s.n, s.k)) / (z.std(ddof=1) / math.sqrt(draws)))
    ok = worst < 4.0 and ks_p > 0.001 and worst_mean < 3.0
    report(capsys, 6, ok, f"27 Laplace checks max {worst:.2f} SE, KS p {ks_p:.3f}, mean_Z max {worst_mean:.2f} SE")


def test_criterion_07_exact_pmf(capsys):
    rng = np.random.default_rng(7)
    worst_norm = worst_mean = 0.0
    cases = 0
    for n in (1, 2, 5, 10, 15, 20):
        counts = simulate_sample(PdParams(0.5, 1.0), n, make_rng(70, n)).species_freqs
        s = from_counts(counts)
        for m in (1, 2, 5, 10, 20, 30):
            for sg, th in ((0.25, 0.5), (0.5, 1.0), (0.75, 10.0), (float(rng.uniform(0.05, 0.95)), float(rng.uniform(0, 20)))):
                p = PdParams(sg, th)
                pmf = exact_pmf_new_species(p, s, m)
                worst_norm = max(worst_norm, abs(pmf.sum() - 1.0))
                worst_mean = max(worst_mean, abs(np.dot(np.arange(m + 1), pmf) - expected_new_species(p, s, m)))
                cases += 1
    p = PdParams(0.5, 1.0)
    s = from_counts(simulate_sample(p, 20, make_rng(71)).species_freqs)
    m, reps = 30, 50_000
    pmf = exact_pmf_new_species(p, s, m)
    k_new, _ = simulate_continuations(p, s, m, reps, make_rng(72), lmax=1)
    obs = np.bincount(k_new, minlength=m + 1).astype(float)
    exp = pmf * reps
    keep = exp >= 5
    o, e = np.append(obs[keep], obs[~keep].sum()), np.append(exp[keep], exp[~keep].sum())
    chi_p = stats.chisquare(o, e * o.sum() / e.sum()).pvalue
    ok = worst_norm <= 1e-10 and worst_mean <= 1e-8 and chi_p > 0.001
    report(capsys, 7, ok, f"{cases} cases, normalization {worst_norm:.1e}, mean {worst_mean:.1e}, chi-square p {chi_p:.3f}")


def test_criterion_08_asymptotics(capsys):
    p = PdParams(0.5, 1.0)
    medians = []
    for n in (10**3, 10**4, 10**5):
        devs = []
        for r in range(40):
            s = simulate_sample(p, n, make_rng(80, r))
            for l in (0, 1, 2):
                # (l + 1) * sigma (1 - sigma)_l / (l + 1)! * k / n
                ref = limit_coeff(p.sigma, l) * s.k / n
                devs.append(abs(bnp_discovery(p, s, 0, l).value / ref - 1.0))
        medians.append(float(np.median(devs)))
    thm1 = medians[0] > medians[1] > medians[2]
    worst2 = worst_r = 0.0
    for lib, q in REFERENCE_PARAMS.items():
        s = load_naegleria(lib)
        for l in (0, 1, 2, 3):
            m = 10**4 * s.n
            ratio = bnp_discovery(q, s, m, l).value * m / ((l + 1) * expected_freq_count(q, s, m, l + 1))
            worst2 = max(worst2, abs(ratio - 1.0))
            m = 10**6 * s.n
            worst_r = max(worst_r, abs(r_star(q, s, m, l) / m ** (q.sigma - 1.0) - 1.0))
    ok = thm1 and worst2 < 0.01 and worst_r < 0.01
    detail = (f"large-n medians {', '.join(f'{v:.4f}' for v in medians)}; large-m max {worst2:.2e}; "
              f"r* ratio max {worst_r:.2e}")
    report(capsys, 8, ok, detail)


def test_criterion_09_simulation(capsys):
    t0 = time.perf_counter()
    bnp_ok = gt_ok = pd_ok = 0
    reps = 100
    for r in range(reps):
        s, pop = zeta_sample(1.5, 1000, make_rng(9, r))
        params = fit_empirical_bayes(s).params
        truth = true_discovery_profile(pop, s)
        e = {name: sse(discovery_profile(name, s, params), truth, n=s.n) for name in ("bnp", "gt", "pd-smooth", "poisson-smooth")}
        bnp_ok += e["bnp"] < 0.01
        gt_ok += 0.1 <= e["gt"] <= 0.6
        pd_ok += e["pd-smooth"] < e["poisson-smooth"]
    dt = time.perf_counter() - t0
    ok = bnp_ok >= 0.9 * reps and gt_ok >= 0.9 * reps and pd_ok >= 0.9 * reps and dt < 300
    report(capsys, 9, ok, f"BNP<0.01 in {bnp_ok}/100, GT in [0.1,0.6] in {gt_ok}/100, PD<Poisson in {pd_ok}/100, {dt:.1f}s")


def test_criterion_10_determinism(capsys):
    invocations = [
        ["interval", "--spectrum", "aerobic", "--fit", "--m", "n,10n", "--l", "0,1", "--cumulative", "0,1,2",
         "--draws", "20000", "--seed", "10", "--format", "json"],
        ["sensitivity", "--spectrum", "anaerobic", "--fit", "--m", "n", "--draws", "2000", "--seed", "11"],
        ["simulate", "--replicates", "20", "--seed", "12"],
        ["estimate", "--spectrum", "aerobic", "--fit", "--estimator", "bnp,gt,sgt,gtoulmin", "--l", "0,1,2"],
    ]
    same = 0
    for args in invocations:
        outs = [subprocess.run([sys.executable, "-m", "discovery", *args], capture_output=True, check=True).stdout
                for _ in range(2)]
        same += outs[0] == outs[1] and len(outs[0]) > 0
    report(capsys, 10, same == len(invocations), f"{same}/{len(invocations)} invocations byte-identical across runs")
