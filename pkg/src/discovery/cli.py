"""Command-line interface: ``discovery <subcommand> [options]``.

Subcommands: fit, estimate, interval, simulate, sensitivity, posterior-grid.
Exit codes: 0 success, 2 input error, 3 numeric infeasibility, 4 sampler stall.
Every table starts with comment lines recording the configuration and seed.
"""

from __future__ import annotations

import argparse
import math
import re
import sys
import warnings
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import estimators as est
from .intervals import (
    DEFAULT_DRAWS,
    Infeasible,
    ZPosteriorSampler,
    asymptotic_estimate,
    credible_interval,
    exact_interval_new_species_based,
    sample_Z_posterior,
)
from .numerics import DomainError, PrecisionLoss
from .pyp import BoundaryFit, PdParams, fit_empirical_bayes, posterior_grid
from .records import DiscoveryEstimate, render_estimates, render_table
from .rng import DEFAULT_SEED, make_rng
from .stable import SamplerStall
from .summary import NAEGLERIA_LIBRARIES, SampleSummary, naegleria_path, read_spectrum_csv, read_tokens
from .zeta import true_discovery_profile, zeta_sample

EXIT_OK, EXIT_INPUT, EXIT_NUMERIC, EXIT_STALL = 0, 2, 3, 4

ESTIMATORS = ("bnp", "bnp-identity", "asymptotic", "gt", "gtoulmin", "smoothed", "sgt", "pd-smooth", "poisson-smooth")
SENS_SIGMAS = (0.2, 0.4, 0.6, 0.8)
SENS_THETAS = (0.1, 1.0, 10.0, 100.0, 1000.0)
SIM_LS = (0, 1, 5, 10, 20, 30)
SIM_COLUMNS = ("bnp", "gt", "poisson-smooth", "pd-smooth", "sgt")


class InputError(ValueError):
    """Bad command-line input."""


@dataclass
class RunConfig:
    """Resolved command-line configuration."""

    command: str
    spectrum: str | None = None
    tokens: str | None = None
    sigma: float | None = None
    theta: float | None = None
    fit: bool = False
    m: list[str] = field(default_factory=list)
    l: list[int] = field(default_factory=list)
    cumulative: list[list[int]] = field(default_factory=list)
    estimator: list[str] = field(default_factory=list)
    smoother: str = "sgt"
    scaling: str = "rstar"
    level: float = 0.95
    draws: int = DEFAULT_DRAWS
    seed: int = DEFAULT_SEED
    fmt: str = "csv"
    out: str | None = None
    exact: bool = False
    zeta_s: float = 1.5
    n: int = 1000
    replicates: int = 500

    def header(self) -> dict:
        """Config as recorded in output headers (output path excluded)."""
        keys = {
            "fit": ("spectrum", "tokens"),
            "estimate": ("spectrum", "tokens", "sigma", "theta", "fit", "m", "l", "cumulative", "estimator", "smoother", "scaling"),
            "interval": ("spectrum", "tokens", "sigma", "theta", "fit", "m", "l", "cumulative", "scaling", "level", "draws", "exact"),
            "simulate": ("zeta_s", "n", "replicates", "l"),
            "sensitivity": ("spectrum", "tokens", "sigma", "theta", "fit", "m", "scaling", "level", "draws"),
            "posterior-grid": ("spectrum", "tokens"),
        }[self.command]
        out = {"command": self.command}
        out.update({k: getattr(self, k) for k in keys})
        return out


# ---------------------------------------------------------------------------
# parsing helpers
# ---------------------------------------------------------------------------


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _str_list(text: str) -> list[str]:
    return [x.strip() for x in text.split(",") if x.strip()]


_M_TOKEN = re.compile(r"^(\d*)n$")


def resolve_m(token: str, n: int) -> int:
    """``"n"``, ``"10n"`` or a plain integer, resolved against sample size ``n``."""
    token = token.strip()
    hit = _M_TOKEN.match(token)
    if hit:
        return (int(hit.group(1)) if hit.group(1) else 1) * n
    try:
        v = float(token)
    except ValueError as exc:
        raise InputError(f"cannot parse m value {token!r}") from exc
    if v < 0 or not v.is_integer():
        raise InputError(f"m must be a nonnegative integer, got {token!r}")
    return int(v)


def load_sample(cfg: RunConfig) -> SampleSummary:
    if (cfg.spectrum is None) == (cfg.tokens is None):
        raise InputError("give exactly one of --spectrum or --tokens")
    if cfg.tokens is not None:
        return read_tokens(Path(cfg.tokens))
    path = Path(cfg.spectrum)
    if not path.exists():
        for lib in NAEGLERIA_LIBRARIES:
            if cfg.spectrum in (lib, f"naegleria_{lib}", f"naegleria_{lib}.csv"):
                path = naegleria_path(lib)
    return read_spectrum_csv(path)


def resolve_params(cfg: RunConfig, s: SampleSummary, meta: dict) -> PdParams:
    explicit = cfg.sigma is not None or cfg.theta is not None
    if explicit and cfg.fit:
        raise InputError("give either --sigma/--theta or --fit, not both")
    if cfg.fit:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", BoundaryFit)
            res = fit_empirical_bayes(s)
        _report_warnings(caught)
        meta["fitted"] = {"sigma": res.sigma, "theta": res.theta, "loglik": res.loglik}
        return res.params
    if cfg.sigma is None or cfg.theta is None:
        raise InputError("give --sigma and --theta, or --fit")
    return PdParams(cfg.sigma, cfg.theta)


def _report_warnings(caught) -> list[str]:
    msgs = []
    for w in caught:
        msgs.append(str(w.message))
        print(f"warning: {w.category.__name__}: {w.message}", file=sys.stderr)
    return msgs


def _targets(cfg: RunConfig) -> list:
    if not cfg.l and not cfg.cumulative:
        cfg.l = [0]
    return list(cfg.l) + [tuple(est.normalize_targets(c)) for c in cfg.cumulative]


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_fit(cfg: RunConfig) -> str:
    s = load_sample(cfg)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", BoundaryFit)
        res = fit_empirical_bayes(s)
    msgs = _report_warnings(caught)
    row = [s.n, s.k, repr(res.sigma), repr(res.theta), repr(res.loglik), int(res.boundary), "; ".join(msgs)]
    fields = ("n", "k", "sigma", "theta", "loglik", "boundary", "messages")
    return render_table(fields, [row], cfg.header(), None, cfg.fmt)


def _one_estimate(name: str, cfg: RunConfig, s: SampleSummary, params, m: int, target) -> DiscoveryEstimate | None:
    cum = isinstance(target, tuple)
    ls = target if cum else (target,)
    if name == "bnp":
        return est.bnp_cumulative(params(), s, m, ls) if cum else est.bnp_discovery(params(), s, m, target)
    if name == "bnp-identity":
        v = math.fsum(est.bnp_discovery_via_identity(params(), s, m, l).value for l in ls)
        return DiscoveryEstimate("bnp-identity", s.n, m, target, v)
    if name == "asymptotic":
        if m == 0 and cfg.scaling == "naive":
            return None
        return asymptotic_estimate(params(), s, m, target, scaling=cfg.scaling)
    if name == "gtoulmin":
        return est.good_toulmin(s, m) if target == 0 else None
    # remaining estimators are (0; l) estimators
    if m != 0:
        return None
    if name == "gt":
        v = math.fsum(est.good_turing(s, l).value for l in ls)
        return DiscoveryEstimate("gt", s.n, 0, target, v)
    variant = cfg.smoother if name == "smoothed" else {"sgt": "sgt", "pd-smooth": "pd", "poisson-smooth": "poisson"}[name]
    rule = {"sgt": est.SmoothingRule.sgt, "poisson": est.SmoothingRule.poisson}.get(variant)
    rule = rule() if rule else est.SmoothingRule.pd(params().sigma)
    v = math.fsum(est.smoothed_good_turing(rule, s, l).value for l in ls)
    return DiscoveryEstimate(rule.tag, s.n, 0, target, v)


def cmd_estimate(cfg: RunConfig) -> str:
    s = load_sample(cfg)
    meta: dict = {}
    cache: list = []

    def params():
        if not cache:
            cache.append(resolve_params(cfg, s, meta))
        return cache[0]

    names = cfg.estimator or ["bnp"]
    for name in names:
        if name not in ESTIMATORS:
            raise InputError(f"unknown estimator {name!r}; choose from {', '.join(ESTIMATORS)}")
    cfg.m = cfg.m or ["0"]
    cfg.estimator = names
    ms = [resolve_m(t, s.n) for t in cfg.m]
    out = []
    for name in names:
        if name in ("gt", "smoothed", "sgt", "pd-smooth", "poisson-smooth") and 0 not in ms:
            raise InputError(f"{name} estimates the (0; l)-discovery; include 0 in --m")
        for m in ms:
            for t in _targets(cfg):
                e = _one_estimate(name, cfg, s, params, m, t)
                if e is not None:
                    out.append(e)
    header = cfg.header()
    if meta:
        header["fitted"] = meta["fitted"]
    return render_estimates(out, header, None, cfg.fmt)


def _z_batch(params: PdParams, s: SampleSummary, draws: int, seed: int) -> np.ndarray:
    return sample_Z_posterior(ZPosteriorSampler(params, s.n, s.k, make_rng(seed)), draws)


def cmd_interval(cfg: RunConfig) -> str:
    s = load_sample(cfg)
    meta: dict = {}
    params = resolve_params(cfg, s, meta)
    cfg.m = cfg.m or ["n"]
    ms = [resolve_m(t, s.n) for t in cfg.m]
    targets = _targets(cfg)
    if cfg.draws < 1000:
        raise InputError("--draws must be >= 1000")
    z = None
    out = []
    for m in ms:
        for t in targets:
            ls = t if isinstance(t, tuple) else (t,)
            point = est.bnp_cumulative(params, s, m, ls)
            point = DiscoveryEstimate("bnp", s.n, m, t, point.value)
            if cfg.exact:
                if t != 0:
                    raise InputError("--exact supports only the single target l = 0")
                ci = exact_interval_new_species_based(params, s, m, 0, cfg.level)
            else:
                if z is None and m > 0:
                    z = _z_batch(params, s, cfg.draws, cfg.seed)
                ci = credible_interval(params, s, m, t, cfg.level, cfg.draws, cfg.scaling, z_draws=z)
            out.append(point.with_interval(ci))
    header = cfg.header()
    if meta:
        header["fitted"] = meta["fitted"]
    return render_estimates(out, header, cfg.seed, cfg.fmt)


def cmd_sensitivity(cfg: RunConfig) -> str:
    s = load_sample(cfg)
    meta: dict = {}
    eb = resolve_params(cfg, s, meta) if (cfg.fit or cfg.sigma is not None or cfg.theta is not None) else None
    if eb is None:
        cfg.fit = True
        eb = resolve_params(cfg, s, meta)
    cfg.m = cfg.m or ["n", "10n", "100n"]
    ms = [resolve_m(t, s.n) for t in cfg.m]
    grid = [("grid", PdParams(sg, th)) for th in SENS_THETAS for sg in SENS_SIGMAS] + [("eb", eb)]
    rows = []
    for kind, p in grid:
        z = _z_batch(p, s, cfg.draws, cfg.seed)
        for m in ms:
            v = est.bnp_discovery(p, s, m, 0).value
            ci = credible_interval(p, s, m, 0, cfg.level, cfg.draws, cfg.scaling, z_draws=z)
            rows.append([kind, repr(p.sigma), repr(p.theta), m, repr(v), repr(ci.lo), repr(ci.hi), cfg.level, ci.draws])
    fields = ("row", "sigma", "theta", "m", "value", "lo", "hi", "level", "draws")
    header = cfg.header()
    if meta:
        header["fitted"] = meta["fitted"]
    return render_table(fields, rows, header, cfg.seed, cfg.fmt)


def cmd_posterior_grid(cfg: RunConfig) -> str:
    s = load_sample(cfg)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", BoundaryFit)
        res = fit_empirical_bayes(s)
    _report_warnings(caught)
    sg = np.linspace(max(0.005, res.sigma - 0.15), min(0.995, res.sigma + 0.15), 61)
    tg = np.linspace(max(res.theta, 1.0) / 20.0, 3.0 * max(res.theta, 1.0), 61)
    post = posterior_grid(s, sg, tg)
    rows = [[repr(float(a)), repr(float(b)), repr(float(post.log_density[i, j]))] for i, a in enumerate(sg) for j, b in enumerate(tg)]
    header = cfg.header()
    header["eb_estimate"] = {"sigma": res.sigma, "theta": res.theta}
    header["grid_mode"] = dict(zip(("sigma", "theta"), post.mode()))
    return render_table(("sigma", "theta", "log_density"), rows, header, None, cfg.fmt)


def _pick_by_k(ks: list[int], groups: int = 5) -> list[int]:
    """One replicate per k-quantile group: the median-k member of each group."""
    order = sorted(range(len(ks)), key=lambda i: (ks[i], i))
    return [int(g[len(g) // 2]) for g in np.array_split(np.array(order), groups) if len(g)]


def cmd_simulate(cfg: RunConfig) -> str:
    if cfg.replicates < 1 or cfg.n < 2:
        raise InputError("need --replicates >= 1 and --n >= 2")
    cfg.l = ls = cfg.l or list(SIM_LS)
    reps = []
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", BoundaryFit)
        for r in range(cfg.replicates):
            s, pop = zeta_sample(cfg.zeta_s, cfg.n, make_rng(cfg.seed, r))
            params = fit_empirical_bayes(s).params
            truth = true_discovery_profile(pop, s)
            profiles = {}
            for name in SIM_COLUMNS:
                try:
                    profiles[name] = est.discovery_profile(name, s, params)
                except (est.InsufficientSpectrum, AttributeError):
                    profiles[name] = None
            sse = {k: (est.sse(v, truth, n=s.n) if v is not None else math.nan) for k, v in profiles.items()}
            reps.append((r, s, truth, profiles, sse))
    if caught:
        print(f"warning: {len(caught)} boundary fits among {cfg.replicates} replicates", file=sys.stderr)
    picked = _pick_by_k([rep[1].k for rep in reps], min(5, len(reps)))
    rows = []
    nan = float("nan")
    for label, idx in enumerate(picked, start=1):
        r, s, truth, profiles, sse = reps[idx]
        for l in ls:
            vals = [repr(profiles[c].get(l, 0.0)) if profiles[c] is not None else repr(nan) for c in SIM_COLUMNS]
            rows.append([label, r, s.n, s.k, l, repr(truth.get(l, 0.0))] + vals)
        rows.append([label, r, s.n, s.k, "SSE", ""] + [repr(sse[c]) for c in SIM_COLUMNS])
    sse_all = {c: np.array([rep[4][c] for rep in reps]) for c in SIM_COLUMNS}
    header = cfg.header()
    header["summary"] = {
        "frac_bnp_sse_below_0.01": float(np.mean(sse_all["bnp"] < 0.01)),
        "frac_gt_sse_in_0.1_0.6": float(np.mean((sse_all["gt"] >= 0.1) & (sse_all["gt"] <= 0.6))),
        "frac_pd_below_poisson": float(np.mean(sse_all["pd-smooth"] < sse_all["poisson-smooth"])),
    }
    fields = ("sample", "replicate", "n", "k", "l", "truth") + SIM_COLUMNS
    return render_table(fields, rows, header, cfg.seed, cfg.fmt)


COMMANDS = {
    "fit": cmd_fit,
    "estimate": cmd_estimate,
    "interval": cmd_interval,
    "simulate": cmd_simulate,
    "sensitivity": cmd_sensitivity,
    "posterior-grid": cmd_posterior_grid,
}


# ---------------------------------------------------------------------------
# argparse
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="discovery", description="Discovery probabilities under PD(sigma, theta) priors.", allow_abbrev=False)
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--spectrum", metavar="PATH", help="CSV with header 'l,count' (or a bundled library name)")
    src.add_argument("--tokens", metavar="PATH", help="newline-delimited species labels")
    common.add_argument("--sigma", type=float)
    common.add_argument("--theta", type=float)
    common.add_argument("--fit", action="store_true", help="use empirical-Bayes (sigma, theta)")
    common.add_argument("--m", type=_str_list, default=[], metavar="LIST", help="additional sample sizes, e.g. n,10n,100n")
    common.add_argument("--l", type=_int_list, default=[], metavar="LIST", help="target frequencies")
    common.add_argument("--cumulative", type=_int_list, action="append", default=[], metavar="LIST", help="cumulative target set (repeatable)")
    common.add_argument("--estimator", type=_str_list, default=[], metavar="LIST", help=", ".join(ESTIMATORS))
    common.add_argument("--smoother", choices=("pd", "poisson", "sgt"), default="sgt")
    common.add_argument("--scaling", choices=("naive", "rstar"), default="rstar")
    common.add_argument("--level", type=float, default=0.95)
    common.add_argument("--draws", type=int, default=DEFAULT_DRAWS)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--format", dest="fmt", choices=("json", "csv"), default="csv")
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--exact", action="store_true", help="exact-pmf interval (l = 0, small m)")
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common], allow_abbrev=False)
        if name == "simulate":
            p.add_argument("--s", dest="zeta_s", type=float, default=1.5, help="Zeta parameter")
            p.add_argument("--n", type=int, default=1000, help="sample size")
            p.add_argument("--replicates", type=int, default=500)
    return parser


def parse_config(argv=None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    kw = vars(ns)
    return RunConfig(**kw)


def run(cfg: RunConfig) -> str:
    if not 0.0 < cfg.level < 1.0:
        raise InputError("--level must lie in (0, 1)")
    return COMMANDS[cfg.command](cfg)


def main(argv=None) -> int:
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_INPUT
    try:
        text = run(cfg)
    except SamplerStall as exc:
        print(f"error: sampler stall: {exc}", file=sys.stderr)
        return EXIT_STALL
    except (Infeasible, PrecisionLoss, DomainError, OverflowError) as exc:
        print(f"error: numeric infeasibility: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if cfg.out:
        Path(cfg.out).write_text(text, encoding="utf-8", newline="\n")
    else:
        try:
            sys.stdout.write(text)
            sys.stdout.flush()
        except BrokenPipeError:
            sys.stderr.close()
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
