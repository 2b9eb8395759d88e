"""The two-parameter Poisson-Dirichlet (Pitman-Yor) species sampling model.

Predictive rule after ``n`` draws with ``k`` species of sizes ``n_i``::

    P(new species)   = (theta + sigma * k) / (theta + n)
    P(species i)     = (n_i - sigma) / (theta + n)

This module covers sequential simulation, continuation of an observed
sample, the EPPF likelihood, empirical-Bayes fitting and a quadrature
posterior over ``(sigma, theta)``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numba
import numpy as np
from scipy.optimize import minimize
from scipy.special import gammaln

from .rng import as_generator
from .summary import SampleSummary, from_counts


class BoundaryFit(UserWarning):
    """The empirical-Bayes optimum sits on the edge of the parameter space."""


class InvalidGrid(ValueError):
    pass


@dataclass(frozen=True)
class PdParams:
    """PD(sigma, theta) parameters: ``0 < sigma < 1`` and ``theta > -sigma``."""

    sigma: float
    theta: float

    def __post_init__(self):
        if not 0.0 < self.sigma < 1.0:
            raise ValueError(f"sigma must lie in (0, 1), got {self.sigma}")
        if not self.theta > -self.sigma or not math.isfinite(self.theta):
            raise ValueError(f"theta must exceed -sigma, got theta={self.theta}, sigma={self.sigma}")


# ---------------------------------------------------------------------------
# EPPF likelihood
# ---------------------------------------------------------------------------


def _eppf_grid(sigma, theta, s: SampleSummary):
    """Vectorised log-EPPF; ``sigma`` and ``theta`` broadcast against each other."""
    sigma = np.asarray(sigma, dtype=float)
    theta = np.asarray(theta, dtype=float)
    n, k = s.n, s.k
    # prod_{i=0}^{k-1}(theta + i sigma) / (theta)_n with the theta factor cancelled,
    # which keeps -sigma < theta <= 0 well defined
    i = np.arange(1, k)
    sb, tb = np.broadcast_arrays(sigma, theta)
    acc = np.zeros(sb.shape)
    if k > 1:
        acc = np.sum(np.log(tb[..., None] + i * sb[..., None]), axis=-1)
    acc = acc - (gammaln(tb + n) - gammaln(tb + 1.0))
    for l, c in s.spectrum_items:
        if l > 1:
            acc = acc + c * (gammaln(l - sb) - gammaln(1.0 - sb))
    return acc


def eppf_loglik(params: PdParams, s: SampleSummary) -> float:
    """Log of the PD(sigma, theta) probability of the observed partition.

    ``prod_{i<k}(theta + i sigma) / (theta)_n * prod_i (1 - sigma)_{n_i - 1}``.
    Needs per-species frequencies.
    """
    s.require_freqs()
    return float(_eppf_grid(params.sigma, params.theta, s))


# ---------------------------------------------------------------------------
# empirical Bayes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FitConfig:
    sigma_grid: tuple[float, ...] = tuple(np.round(np.arange(0.01, 1.0, 0.02), 10))
    theta_grid: tuple[float, ...] = tuple(np.logspace(-2, 4, 61))
    eps: float = 1e-6
    tol: float = 1e-8
    max_iter: int = 20000
    boundary_tol: float = 1e-3
    theta_max: float = 1e7


@dataclass(frozen=True)
class FitResult:
    params: PdParams
    loglik: float
    boundary: bool = False
    messages: tuple[str, ...] = field(default_factory=tuple)

    @property
    def sigma(self) -> float:
        return self.params.sigma

    @property
    def theta(self) -> float:
        return self.params.theta


def fit_empirical_bayes(s: SampleSummary, config: FitConfig | None = None) -> FitResult:
    """Maximise the EPPF over ``(sigma, theta)``.

    Coarse grid scan, then Nelder-Mead in ``(logit sigma, log(theta + sigma - eps))``
    started from the best grid cell. Deterministic for a fixed config.
    A :class:`BoundaryFit` warning is issued (and recorded on the result) when
    the optimum approaches ``sigma -> 0``, ``sigma -> 1``, ``theta -> -sigma``
    or runs off to very large ``theta``.
    """
    config = config or FitConfig()
    s.require_freqs()
    if s.n < 2:
        raise ValueError("empirical Bayes needs n >= 2")
    sg = np.asarray(config.sigma_grid)[:, None]
    tg = np.asarray(config.theta_grid)[None, :]
    ll = _eppf_grid(sg, tg, s)
    i, j = np.unravel_index(np.nanargmax(ll), ll.shape)
    s0, t0 = float(sg[i, 0]), float(tg[0, j])
    eps = config.eps

    def unpack(z):
        sig = 1.0 / (1.0 + math.exp(-z[0]))
        sig = min(max(sig, 1e-12), 1.0 - 1e-12)
        return sig, math.exp(z[1]) - sig + eps

    def objective(z):
        if abs(z[1]) > 700 or abs(z[0]) > 700:
            return math.inf
        sig, th = unpack(z)
        if not th > -sig:
            return math.inf
        v = float(_eppf_grid(sig, th, s))
        return -v if math.isfinite(v) else math.inf

    z0 = np.array([math.log(s0 / (1.0 - s0)), math.log(t0 + s0 - eps)])
    res = minimize(
        objective,
        z0,
        method="Nelder-Mead",
        options=dict(xatol=config.tol, fatol=config.tol, maxiter=config.max_iter, maxfev=config.max_iter),
    )
    sig, th = unpack(res.x)
    messages = []
    if sig < config.boundary_tol or sig > 1.0 - config.boundary_tol:
        messages.append(f"sigma at boundary ({sig:.3g})")
    if th + sig < config.boundary_tol:
        messages.append(f"theta at lower boundary ({th:.3g})")
    if th > config.theta_max:
        messages.append(f"theta diverging ({th:.3g})")
    for msg in messages:
        warnings.warn(BoundaryFit(msg), stacklevel=2)
    return FitResult(PdParams(sig, th), -float(res.fun), bool(messages), tuple(messages))


# ---------------------------------------------------------------------------
# simulation
# ---------------------------------------------------------------------------


@numba.njit(cache=True)
def _crp_extend(counts0, n0, m, sigma, theta, gen):
    """Run the predictive chain ``m`` steps from species sizes ``counts0``.

    An existing species is chosen by picking a uniform past observation and
    accepting its species with probability ``1 - sigma / n_i``, which gives
    selection probabilities proportional to ``n_i - sigma``.
    """
    k0 = counts0.shape[0]
    total = n0 + m
    counts = np.zeros(k0 + m, dtype=np.int64)
    obs = np.empty(max(total, 1), dtype=np.int64)
    pos = 0
    for i in range(k0):
        counts[i] = counts0[i]
        for _ in range(counts0[i]):
            obs[pos] = i
            pos += 1
    k = k0
    size = n0
    for _ in range(m):
        if size == 0 or gen.random() * (theta + size) < theta + sigma * k:
            counts[k] = 1
            obs[size] = k
            k += 1
        else:
            while True:
                sp = obs[int(gen.random() * size)]
                if gen.random() * counts[sp] >= sigma:
                    break
            counts[sp] += 1
            obs[size] = sp
        size += 1
    return counts[:k], k - k0


def simulate_sample(params: PdParams, n: int, rng=None) -> SampleSummary:
    """Draw ``n`` observations from the PD(sigma, theta) predictive rule."""
    if n < 1:
        raise ValueError("n must be >= 1")
    gen = as_generator(rng)
    counts, _ = _crp_extend(np.zeros(0, dtype=np.int64), 0, int(n), params.sigma, params.theta, gen)
    return from_counts(counts.tolist())


def simulate_continuation(params: PdParams, s: SampleSummary, m: int, rng=None):
    """Continue the chain ``m`` steps from an observed sample.

    Returns ``(k_new, spectrum_after)``: the number of new species among the
    additional ``m`` draws and the spectrum ``{l: m_l}`` of the enlarged
    sample of size ``n + m``.
    """
    freqs = np.asarray(s.require_freqs(), dtype=np.int64)
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return 0, s.spectrum
    gen = as_generator(rng)
    counts, k_new = _crp_extend(freqs, s.n, int(m), params.sigma, params.theta, gen)
    ls, cs = np.unique(counts, return_counts=True)
    return int(k_new), {int(l): int(c) for l, c in zip(ls, cs)}


@numba.njit(cache=True)
def _continuation_stats(counts0, n0, m, sigma, theta, reps, lmax, gen):
    k_new = np.empty(reps, dtype=np.int64)
    spec = np.zeros((reps, lmax + 1), dtype=np.int64)
    for r in range(reps):
        counts, kn = _crp_extend(counts0, n0, m, sigma, theta, gen)
        k_new[r] = kn
        for c in counts:
            if c <= lmax:
                spec[r, c] += 1
    return k_new, spec


def simulate_continuations(params: PdParams, s: SampleSummary, m: int, reps: int, rng=None, lmax: int | None = None):
    """Vectorised replicates of :func:`simulate_continuation`.

    Returns ``(k_new[reps], spectrum[reps, lmax + 1])`` where
    ``spectrum[r, l]`` is the number of species with frequency ``l`` after
    replicate ``r`` (frequencies above ``lmax`` are dropped).
    """
    freqs = np.asarray(s.require_freqs(), dtype=np.int64)
    gen = as_generator(rng)
    lmax = s.n + m if lmax is None else int(lmax)
    return _continuation_stats(freqs, s.n, int(m), params.sigma, params.theta, int(reps), lmax, gen)


# ---------------------------------------------------------------------------
# grid posterior
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ThetaPrior:
    """Gamma prior on theta. ``scale`` is the Gamma scale (mean = shape * scale)."""

    shape: float = 1.0
    scale: float = 100.0

    def logpdf(self, theta):
        theta = np.asarray(theta, dtype=float)
        return (self.shape - 1.0) * np.log(theta) - theta / self.scale - gammaln(self.shape) - self.shape * math.log(self.scale)


@dataclass(frozen=True)
class GridPosterior:
    sigma_grid: np.ndarray
    theta_grid: np.ndarray
    log_density: np.ndarray
    normalized: bool = False

    def _weights(self) -> np.ndarray:
        return np.outer(_trapz_weights(self.sigma_grid), _trapz_weights(self.theta_grid))

    def masses(self) -> np.ndarray:
        """Cell masses under trapezoidal quadrature; they sum to 1."""
        w = self._weights()
        top = np.max(self.log_density)
        p = w * np.exp(self.log_density - top)
        return p / p.sum()

    def normalize(self) -> "GridPosterior":
        w = self._weights()
        top = np.max(self.log_density)
        log_z = top + math.log(float(np.sum(w * np.exp(self.log_density - top))))
        return GridPosterior(self.sigma_grid, self.theta_grid, self.log_density - log_z, True)

    def mode(self) -> tuple[float, float]:
        i, j = np.unravel_index(np.argmax(self.log_density), self.log_density.shape)
        return float(self.sigma_grid[i]), float(self.theta_grid[j])

    def to_csv(self) -> str:
        lines = ["sigma,theta,log_density"]
        for i, sg in enumerate(self.sigma_grid):
            for j, tg in enumerate(self.theta_grid):
                lines.append(f"{sg:.10g},{tg:.10g},{self.log_density[i, j]:.12g}")
        return "\n".join(lines) + "\n"


def _trapz_weights(grid: np.ndarray) -> np.ndarray:
    if grid.size == 1:
        return np.ones(1)
    d = np.diff(grid)
    w = np.zeros(grid.size)
    w[:-1] += d / 2.0
    w[1:] += d / 2.0
    return w


def posterior_grid(
    s: SampleSummary,
    sigma_grid,
    theta_grid,
    theta_prior: ThetaPrior | None = None,
    normalize: bool = True,
) -> GridPosterior:
    """Log posterior of ``(sigma, theta)`` on a grid.

    Prior: uniform on (0, 1) for sigma, Gamma for theta (default shape 1,
    scale 100, i.e. mean 100; pass ``ThetaPrior(scale=0.01)`` for the
    rate-100 reading).
    """
    s.require_freqs()
    sg = np.asarray(sigma_grid, dtype=float).ravel()
    tg = np.asarray(theta_grid, dtype=float).ravel()
    if sg.size == 0 or tg.size == 0:
        raise InvalidGrid("empty grid")
    if np.any(sg <= 0) or np.any(sg >= 1) or np.any(tg <= 0):
        raise InvalidGrid("grid must satisfy 0 < sigma < 1 and theta > 0")
    if np.any(np.diff(sg) <= 0) or np.any(np.diff(tg) <= 0):
        raise InvalidGrid("grids must be strictly ascending")
    prior = theta_prior or ThetaPrior()
    ld = _eppf_grid(sg[:, None], tg[None, :], s) + prior.logpdf(tg)[None, :]
    post = GridPosterior(sg, tg, ld, False)
    return post.normalize() if normalize else post
