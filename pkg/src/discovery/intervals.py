"""Posterior credible intervals for the (m; l)-discovery.

For large ``m`` the (m; l)-discovery behaves like
``m**(sigma-1) * c_l * Z`` where ``c_l = sigma (1-sigma)_l / l!`` and, given
the data, ``Z = B * Z_q`` with ``B ~ Beta(k + theta/sigma, n/sigma - k)`` and
``Z_q`` a polynomially tilted stable variable with ``q = (theta + n)/sigma``.
``Z_q`` is drawn as ``L**(-sigma)`` where ``L`` is exponentially tilted
stable with random tilt ``U = G**(1/sigma)``, ``G ~ Gamma(q)``.

The crude rate ``m**(sigma-1)`` can be replaced by the finite-m factor
``r*(m, l)`` that makes the asymptotic point estimate coincide with the
exact one. For the new-species case ``l = 0`` and small ``m`` the exact law
of the number of new species gives exact intervals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

import numba
import numpy as np

from .estimators import OutOfRange, _check_l, _check_m, bnp_discovery, normalize_targets
from .numerics import (
    EXACT_MAX_M,
    PrecisionLoss,
    gen_factorial_coeff,
    log_gamma_ratio,
    log_pochhammer,
)
from .pyp import PdParams
from .records import CredibleInterval, DiscoveryEstimate
from .rng import as_generator
from .stable import MAX_PROPOSALS, SamplerStall, _double_rejection, _fast_rejection
from .summary import SampleSummary

#: tilts with ``u**sigma`` above this use double rejection under ``method="auto"``
AUTO_SWITCH = 50.0
DEFAULT_DRAWS = 100_000

_METHODS = {"fast-rejection": 0, "double-rejection": 1, "auto": 2}


class InvalidState(ValueError):
    """Posterior Beta parameters are not both positive."""


class Infeasible(ArithmeticError):
    """The exact pmf cannot be evaluated to working precision."""


class Unsupported(ValueError):
    """Requested exact interval is not available for this target."""


# ---------------------------------------------------------------------------
# Z samplers
# ---------------------------------------------------------------------------


@numba.njit(cache=True)
def _z_draws(sigma, q, a, b, size, gen, mode, cap, switch):
    out = np.empty(size)
    used = 0
    for i in range(size):
        g = gen.standard_gamma(q)
        u = g ** (1.0 / sigma)
        if mode == 1 or (mode == 2 and u**sigma > switch):
            x = _double_rejection(sigma, u, gen)
        else:
            x, r, p = _fast_rejection(sigma, u, gen, cap - used)
            used += p
            if x < 0.0:
                return out, -1
        z = x ** (-sigma)
        if a > 0.0:
            ga = gen.standard_gamma(a)
            gb = gen.standard_gamma(b)
            z *= ga / (ga + gb)
        out[i] = z
    return out, used


def _run_z(sigma, q, a, b, size, rng, method, max_proposals):
    if method not in _METHODS:
        raise ValueError(f"unknown method {method!r}")
    gen = as_generator(rng)
    out, used = _z_draws(float(sigma), float(q), float(a), float(b), int(size), gen, _METHODS[method], int(max_proposals), AUTO_SWITCH)
    if used < 0:
        raise SamplerStall(f"fast rejection exceeded {max_proposals} proposals")
    return out


def sample_Z(sigma: float, q: float, rng=None, size: int | None = None, method: str = "auto", max_proposals=MAX_PROPOSALS):
    """Draws of ``Z_q = L**(-sigma)``, ``L`` tilted stable with tilt ``Gamma(q)**(1/sigma)``.

    ``method`` selects the tilted-stable engine: ``"fast-rejection"``,
    ``"double-rejection"`` or ``"auto"`` (fast rejection for small tilts).
    """
    if not 0.0 < sigma < 1.0:
        raise ValueError("sigma must lie in (0, 1)")
    if not q > 0:
        raise ValueError("q must be positive")
    out = _run_z(sigma, q, 0.0, 0.0, 1 if size is None else size, rng, method, max_proposals)
    return float(out[0]) if size is None else out


@dataclass
class ZPosteriorSampler:
    """Sampler of the posterior limit variable ``B * Z_q`` for a sample ``(n, k)``."""

    params: PdParams
    n: int
    k: int
    rng: np.random.Generator = field(default=None, repr=False)
    method: str = "auto"

    def __post_init__(self):
        if not 1 <= self.k <= self.n:
            raise InvalidState(f"need 1 <= k <= n, got n={self.n}, k={self.k}")
        if self.beta_a <= 0 or self.beta_b <= 0:
            raise InvalidState(f"Beta({self.beta_a}, {self.beta_b}) is not a valid law")
        self.rng = as_generator(self.rng)

    @property
    def beta_a(self) -> float:
        return self.k + self.params.theta / self.params.sigma

    @property
    def beta_b(self) -> float:
        return self.n / self.params.sigma - self.k

    @property
    def q(self) -> float:
        return (self.params.theta + self.n) / self.params.sigma

    def draw(self, count: int) -> np.ndarray:
        return _run_z(self.params.sigma, self.q, self.beta_a, self.beta_b, count, self.rng, self.method, MAX_PROPOSALS)


def sample_Z_posterior(zs: ZPosteriorSampler, count: int) -> np.ndarray:
    """``count`` independent draws of the posterior limit variable."""
    return zs.draw(count)


def mean_Z(params: PdParams, n: int, k: int) -> float:
    """``E[Z] = (k + theta/sigma) Gamma(theta + n) / Gamma(theta + n + sigma)``."""
    sig, th = params.sigma, params.theta
    return (k + th / sig) * math.exp(-log_gamma_ratio(th + n, sig))


# ---------------------------------------------------------------------------
# scaling factors and asymptotic estimates
# ---------------------------------------------------------------------------


def limit_coeff(sigma: float, l: int) -> float:
    """``sigma (1 - sigma)_l / l!``, the mass of frequency ``l`` in the limit."""
    return sigma * math.exp(log_pochhammer(1.0 - sigma, l) - math.lgamma(l + 1.0))


def _targets(target) -> tuple[int, ...]:
    if isinstance(target, (tuple, list, set, frozenset)):
        return normalize_targets(target)
    return (int(target),)


def r_star(params: PdParams, s: SampleSummary, m: int, l: int) -> float:
    """Finite-m scaling factor replacing ``m**(sigma - 1)``.

    Defined by ``r*(m, l) c_l E[Z] = D(m, l)`` with ``D`` the exact estimate;
    tends to ``m**(sigma - 1)`` as ``m`` grows.
    """
    m = _check_m(m)
    l = _check_l(s, m, l)
    d = bnp_discovery(params, s, m, l).value
    return d / (limit_coeff(params.sigma, l) * mean_Z(params, s.n, s.k))


def r_star_cum(params: PdParams, s: SampleSummary, m: int, ls: Iterable[int]) -> float:
    """Coefficient-weighted average of :func:`r_star` over a target set."""
    ls = normalize_targets(ls)
    c = [limit_coeff(params.sigma, l) for l in ls]
    return math.fsum(ci * r_star(params, s, m, l) for ci, l in zip(c, ls)) / math.fsum(c)


def _scale(params: PdParams, s: SampleSummary, m: int, ls: tuple[int, ...], scaling: str) -> float:
    """Total factor multiplying Z: rate times summed limit coefficients."""
    m = _check_m(m)
    for l in ls:
        _check_l(s, m, l)
    coeff = math.fsum(limit_coeff(params.sigma, l) for l in ls)
    if scaling == "naive":
        if m == 0:
            raise OutOfRange("the m**(sigma-1) rate needs m >= 1")
        rate = m ** (params.sigma - 1.0)
    elif scaling == "rstar":
        rate = r_star(params, s, m, ls[0]) if len(ls) == 1 else r_star_cum(params, s, m, ls)
    else:
        raise ValueError(f"unknown scaling {scaling!r}")
    return rate * coeff


def _target_value(ls: tuple[int, ...], target):
    return ls if isinstance(target, (tuple, list, set, frozenset)) else ls[0]


def asymptotic_estimate(params: PdParams, s: SampleSummary, m: int, target, scaling: str = "naive") -> DiscoveryEstimate:
    """Large-m estimate ``rate * c * E[Z]``; ``scaling`` is ``"naive"`` or ``"rstar"``."""
    ls = _targets(target)
    value = _scale(params, s, m, ls, scaling) * mean_Z(params, s.n, s.k)
    return DiscoveryEstimate(f"asymptotic-{scaling}", s.n, int(m), _target_value(ls, target), value)


def credible_interval(
    params: PdParams,
    s: SampleSummary,
    m: int,
    target,
    level: float = 0.95,
    draws: int = DEFAULT_DRAWS,
    scaling: str = "rstar",
    rng=None,
    z_draws: np.ndarray | None = None,
) -> CredibleInterval:
    """Equal-tailed asymptotic credible interval for a single or cumulative target.

    ``z_draws`` lets several targets share one batch of posterior Z draws, in
    which case ``draws`` and ``rng`` are ignored. ``m = 0`` gives a
    zero-width interval at the exact estimate.
    """
    if not 0.0 < level < 1.0:
        raise ValueError("level must lie in (0, 1)")
    ls = _targets(target)
    m = _check_m(m)
    method = f"asymptotic-{scaling}"
    if m == 0:
        v = math.fsum(bnp_discovery(params, s, 0, l).value for l in ls)
        for l in ls:
            _check_l(s, 0, l)
        return CredibleInterval(v, v, level, method, 0)
    factor = _scale(params, s, m, ls, scaling)
    if z_draws is None:
        if draws < 1000:
            raise ValueError("draws must be >= 1000")
        z_draws = sample_Z_posterior(ZPosteriorSampler(params, s.n, s.k, as_generator(rng)), draws)
    alpha = 1.0 - level
    lo, hi = np.quantile(z_draws, [alpha / 2.0, 1.0 - alpha / 2.0])
    return CredibleInterval(float(factor * lo), float(factor * hi), level, method, int(len(z_draws)))


# ---------------------------------------------------------------------------
# exact law of the number of new species
# ---------------------------------------------------------------------------


#: cancellation budget for the pmf; larger losses switch to rational arithmetic
PMF_DIGITS_LOST = 2.0


def exact_pmf_new_species(params: PdParams, s: SampleSummary, m: int, method: str = "auto") -> np.ndarray:
    """Posterior pmf of the number of new species among ``m`` more draws.

    ``P[K = x] = (theta/sigma + k)_x / (theta + n)_m * C(m, x; sigma, -n + sigma k)``
    for ``x = 0..m``, with ``C`` the noncentral generalized factorial
    coefficient.

    Raises
    ------
    Infeasible
        If the coefficient cannot be evaluated to working precision
        (typically ``m`` beyond the rational fallback range).
    """
    m = _check_m(m)
    sig, th, n, k = params.sigma, params.theta, s.n, s.k
    gamma = -n + sig * k
    out = np.empty(m + 1)
    base = log_pochhammer(th + n, m)
    for x in range(m + 1):
        try:
            c = gen_factorial_coeff(m, x, sig, gamma, method=method, max_digits_lost=PMF_DIGITS_LOST)
        except PrecisionLoss as exc:
            raise Infeasible(f"generalized factorial coefficient lost precision at m={m}, x={x}") from exc
        if c.sign < 0:
            raise Infeasible(f"negative coefficient at m={m}, x={x}")
        out[x] = 0.0 if c.sign == 0 else math.exp(log_pochhammer(th / sig + k, x) - base + c.log_abs)
    return out


def exact_interval_new_species_based(params: PdParams, s: SampleSummary, m: int, l: int = 0, level: float = 0.95) -> CredibleInterval:
    """Exact equal-tailed interval for the (m; 0)-discovery.

    The discovery is ``(theta + sigma k + sigma K) / (theta + n + m)`` with
    ``K`` the number of new species, so its law follows from
    :func:`exact_pmf_new_species`. ``lo`` (``hi``) is the smallest support
    point with CDF at least ``alpha/2`` (``1 - alpha/2``).
    """
    if l != 0:
        raise Unsupported("exact intervals are available for l = 0 only")
    if not 0.0 < level < 1.0:
        raise ValueError("level must lie in (0, 1)")
    m = _check_m(m)
    sig, th, n, k = params.sigma, params.theta, s.n, s.k
    if m == 0:
        v = bnp_discovery(params, s, 0, 0).value
        return CredibleInterval(v, v, level, "exact-pmf", 0)
    if m > EXACT_MAX_M:
        raise Infeasible(f"exact pmf limited to m <= {EXACT_MAX_M}")
    pmf = exact_pmf_new_species(params, s, m)
    cdf = np.cumsum(pmf)
    alpha = 1.0 - level
    tol = 1e-12
    x_lo = int(np.searchsorted(cdf, alpha / 2.0 - tol))
    x_hi = int(np.searchsorted(cdf, 1.0 - alpha / 2.0 - tol))
    x_hi = min(x_hi, m)
    values = (th + sig * k + sig * np.arange(m + 1)) / (th + n + m)
    return CredibleInterval(float(values[x_lo]), float(values[x_hi]), level, "exact-pmf", 0)


__all__ = [
    "AUTO_SWITCH",
    "DEFAULT_DRAWS",
    "InvalidState",
    "Infeasible",
    "Unsupported",
    "SamplerStall",
    "ZPosteriorSampler",
    "sample_Z",
    "sample_Z_posterior",
    "mean_Z",
    "limit_coeff",
    "r_star",
    "r_star_cum",
    "asymptotic_estimate",
    "credible_interval",
    "exact_pmf_new_species",
    "exact_interval_new_species_based",
]
