"""Point estimators of the (m; l)-discovery.

The (m; l)-discovery is the probability that observation ``n + m + 1`` is a
species seen exactly ``l`` times among the first ``n + m``. Given only the
first ``n`` observations this module offers

* the Bayesian estimator under a PD(sigma, theta) prior, computed two ways
  (closed form and through the expected number of new species / expected
  frequency counts),
* Good-Turing and Good-Toulmin,
* smoothed Good-Turing with PD, Poisson or Simple Good-Turing smoothing.

All Bayesian quantities are built from log-gamma ratios so that ``m`` can be
many orders of magnitude larger than ``n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from scipy.special import gammaln

from .numerics import log_binom, log_gamma_ratio, log_pochhammer, log_pochhammer_ratio, logsumexp
from .pyp import PdParams
from .records import DiscoveryEstimate
from .summary import SampleSummary


class OutOfRange(ValueError):
    """Target frequency outside ``0..n+m`` (or a negative ``m``)."""


class InvalidTarget(ValueError):
    """Malformed cumulative target, e.g. repeated frequencies."""


class InsufficientSpectrum(ValueError):
    """Simple Good-Turing needs at least two populated frequencies."""


def _check_m(m) -> int:
    if int(m) != m or m < 0:
        raise OutOfRange(f"m must be a nonnegative integer, got {m}")
    return int(m)


def _check_l(s: SampleSummary, m: int, l, lo: int = 0) -> int:
    if int(l) != l or not lo <= l <= s.n + m:
        raise OutOfRange(f"l must lie in {lo}..n+m = {lo}..{s.n + m}, got {l}")
    return int(l)


# ---------------------------------------------------------------------------
# Bayesian nonparametric estimators
# ---------------------------------------------------------------------------


def _bnp_log_new(p: PdParams, s: SampleSummary, m: int) -> float:
    sig, th, n, k = p.sigma, p.theta, s.n, s.k
    # (theta+sigma k)/(theta+n) * (theta+n+sigma)_m / (theta+n+1)_m
    return math.log(th + sig * k) - math.log(th + n) + log_pochhammer_ratio(th + n + sig, th + n + 1.0, m)


def _bnp_log_terms(p: PdParams, s: SampleSummary, m: int, l: int, shift: int) -> list[float]:
    """Log terms of the l >= 1 estimator (``shift=1``) or of M(l) (``shift=0``).

    With ``shift=1`` the sum is the closed-form discovery estimate; with
    ``shift=0`` it is the posterior mean of the number of species with
    frequency ``l`` after ``m`` more draws. The two differ by the factor
    ``(l - sigma) / (theta + n + m)``.
    """
    sig, th, n, k = p.sigma, p.theta, s.n, s.k
    # shared tail Gamma(theta+n+sigma+m-l) / Gamma(theta+n+m+shift)
    tail = -log_gamma_ratio(th + n + sig + m - l, l - sig + shift)
    terms = []
    for i, mi in s.spectrum_items:
        if i > l:
            break
        if l - i > m:
            continue
        t = log_binom(m, l - i) + math.log(mi) + log_pochhammer(i - sig, l - i + shift)
        t += log_gamma_ratio(th + n - i + sig, i - sig)
        terms.append(t + tail)
    if l <= m:
        t = log_binom(m, l) + log_pochhammer(1.0 - sig, l - 1 + shift) + math.log(th + sig * k)
        t -= log_gamma_ratio(th + n, sig)
        terms.append(t + tail)
    return terms


def bnp_discovery(params: PdParams, s: SampleSummary, m: int, l: int) -> DiscoveryEstimate:
    """Posterior mean of the (m; l)-discovery under a PD(sigma, theta) prior.

    Parameters
    ----------
    params : PdParams
    s : SampleSummary
        Observed sample of size ``n``.
    m : int
        Size of the additional, unobserved sample.
    l : int
        Target frequency, ``0 <= l <= n + m``.

    Examples
    --------
    >>> from discovery.summary import from_spectrum
    >>> s = from_spectrum([(1, 2), (2, 1)])
    >>> round(bnp_discovery(PdParams(0.5, 1.0), s, 0, 0).value, 12)
    0.5
    """
    m = _check_m(m)
    l = _check_l(s, m, l)
    if l == 0:
        value = math.exp(_bnp_log_new(params, s, m))
    else:
        terms = _bnp_log_terms(params, s, m, l, shift=1)
        value = math.exp(logsumexp(terms)) if terms else 0.0
    return DiscoveryEstimate("bnp", s.n, m, l, value)


def expected_new_species(params: PdParams, s: SampleSummary, m: int) -> float:
    """Posterior mean number of new species among ``m`` additional draws."""
    m = _check_m(m)
    sig, th, n, k = params.sigma, params.theta, s.n, s.k
    return (th / sig + k) * math.expm1(log_pochhammer_ratio(th + n + sig, th + n, m))


def expected_freq_count(params: PdParams, s: SampleSummary, m: int, l: int) -> float:
    """Posterior mean number of species with frequency ``l`` in the enlarged sample."""
    m = _check_m(m)
    l = _check_l(s, m, l, lo=1)
    terms = _bnp_log_terms(params, s, m, l, shift=0)
    return math.exp(logsumexp(terms)) if terms else 0.0


def bnp_discovery_via_identity(params: PdParams, s: SampleSummary, m: int, l: int) -> DiscoveryEstimate:
    """Same estimate as :func:`bnp_discovery`, routed through K and M(l).

    ``l = 0``: ``(theta + sigma k + sigma K) / (theta + n + m)``;
    ``l >= 1``: ``(l - sigma) M(l) / (theta + n + m)``.
    """
    m = _check_m(m)
    l = _check_l(s, m, l)
    sig, th, n, k = params.sigma, params.theta, s.n, s.k
    if l == 0:
        value = (th + sig * k + sig * expected_new_species(params, s, m)) / (th + n + m)
    else:
        value = (l - sig) * expected_freq_count(params, s, m, l) / (th + n + m)
    return DiscoveryEstimate("bnp-identity", n, m, l, value)


def normalize_targets(ls: Iterable[int]) -> tuple[int, ...]:
    """Sorted tuple of distinct frequencies; repeated entries raise :class:`InvalidTarget`."""
    ls = [int(l) for l in ls]
    if not ls:
        raise InvalidTarget("empty target set")
    if len(set(ls)) != len(ls):
        raise InvalidTarget(f"repeated frequency in target set {ls}")
    return tuple(sorted(ls))


def bnp_cumulative(params: PdParams, s: SampleSummary, m: int, ls: Iterable[int]) -> DiscoveryEstimate:
    """Estimate of the probability that the next draw has any frequency in ``ls``."""
    ls = normalize_targets(ls)
    m = _check_m(m)
    for l in ls:
        _check_l(s, m, l)
    value = math.fsum(bnp_discovery(params, s, m, l).value for l in ls)
    return DiscoveryEstimate("bnp", s.n, m, ls, value)


# ---------------------------------------------------------------------------
# frequentist estimators
# ---------------------------------------------------------------------------


def good_turing(s: SampleSummary, l: int) -> DiscoveryEstimate:
    """Good-Turing estimate ``(l + 1) m_{l+1} / n`` of the (0; l)-discovery."""
    l = _check_l(s, 0, l)
    return DiscoveryEstimate("gt", s.n, 0, l, (l + 1) * s.m(l + 1) / s.n)


def good_toulmin(s: SampleSummary, m: int, clamp: bool = False) -> DiscoveryEstimate:
    """Good-Toulmin extrapolation of the new-species probability.

    ``(1/n) sum_i (-m/n)^(i-1) i m_i`` with ``0**0 = 1``. The series is
    unreliable once ``m > n``; such values, and any value outside [0, 1],
    are flagged ``unstable``. ``clamp=True`` clips the value to [0, 1]
    but keeps the flag.
    """
    m = _check_m(m)
    n = s.n
    g = m / n
    terms = []
    for i, mi in s.spectrum_items:
        if g == 0.0:
            w = 1.0 if i == 1 else 0.0
        else:
            w = (-g) ** (i - 1)
        terms.append(w * i * mi)
    value = math.fsum(terms) / n
    unstable = g > 1.0 or not 0.0 <= value <= 1.0
    if clamp:
        value = min(1.0, max(0.0, value))
    return DiscoveryEstimate("gtoulmin", n, m, 0, value, unstable=unstable)


# ---------------------------------------------------------------------------
# smoothing
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SmoothingRule:
    """Frequency-count smoothing rule.

    ``variant`` is ``"pd"`` (needs ``sigma``), ``"poisson"`` (``tau`` and
    optional ``lam``; ``lam=None`` means ``n / k``) or ``"sgt"``.
    """

    variant: str
    sigma: float | None = None
    tau: int = 1
    lam: float | None = None

    def __post_init__(self):
        if self.variant == "pd":
            if self.sigma is None or not 0.0 < self.sigma < 1.0:
                raise ValueError("PD smoothing needs sigma in (0, 1)")
        elif self.variant == "poisson":
            if int(self.tau) != self.tau or self.tau < 0:
                raise ValueError("Poisson smoothing needs an integer tau >= 0")
            if self.lam is not None and not self.lam > 0:
                raise ValueError("Poisson smoothing needs lam > 0")
        elif self.variant != "sgt":
            raise ValueError(f"unknown smoothing variant {self.variant!r}")

    @classmethod
    def pd(cls, sigma: float) -> "SmoothingRule":
        return cls("pd", sigma=float(sigma))

    @classmethod
    def poisson(cls, tau: int = 1, lam: float | None = None) -> "SmoothingRule":
        return cls("poisson", tau=int(tau), lam=lam)

    @classmethod
    def sgt(cls) -> "SmoothingRule":
        return cls("sgt")

    @property
    def tag(self) -> str:
        return {"pd": "pd-smooth", "poisson": "poisson-smooth", "sgt": "sgt"}[self.variant]


def pd_coefficients(sigma: float, lmax: int) -> np.ndarray:
    """``c[l] = sigma (1 - sigma)_{l-1} / l!`` for ``l = 0..lmax`` (``c[0] = 0``)."""
    c = np.zeros(lmax + 1)
    if lmax >= 1:
        c[1] = sigma
        for l in range(1, lmax):
            c[l + 1] = c[l] * (l - sigma) / (l + 1)
    return c


@dataclass(frozen=True)
class SgtFit:
    """Log-log line fitted to the averaged frequency counts."""

    intercept: float
    slope: float

    def smoothed(self, r) -> np.ndarray:
        r = np.asarray(r, dtype=float)
        return np.exp(self.intercept + self.slope * np.log(r))


def sgt_fit(s: SampleSummary) -> SgtFit:
    """Least-squares fit of ``log Z_r`` on ``log r``.

    ``Z_r = m_r / (0.5 (t - q))`` with ``q`` and ``t`` the neighbouring
    populated frequencies; ``q = 0`` for the first and ``t = 2r - q`` for the
    last.
    """
    rs = np.array([l for l, _ in s.spectrum_items], dtype=float)
    ns = np.array([c for _, c in s.spectrum_items], dtype=float)
    if rs.size < 2:
        raise InsufficientSpectrum("simple Good-Turing needs at least two populated frequencies")
    q = np.concatenate(([0.0], rs[:-1]))
    t = np.concatenate((rs[1:], [2.0 * rs[-1] - q[-1]]))
    z = ns / (0.5 * (t - q))
    slope, intercept = np.polyfit(np.log(rs), np.log(z), 1)
    return SgtFit(float(intercept), float(slope))


def smooth_spectrum(rule: SmoothingRule, s: SampleSummary, lmax: int | None = None) -> np.ndarray:
    """Smoothed counts ``m'_l`` for ``l = 0..lmax`` (entry 0 is 0).

    ``lmax`` defaults to ``n + 1`` so every Good-Turing target up to ``n`` is
    covered.
    """
    lmax = s.n + 1 if lmax is None else int(lmax)
    l = np.arange(lmax + 1, dtype=float)
    out = np.zeros(lmax + 1)
    if rule.variant == "pd":
        return pd_coefficients(rule.sigma, lmax) * s.k
    if rule.variant == "poisson":
        lam = s.n / s.k if rule.lam is None else rule.lam
        j = rule.tau + l[1:] - 1.0
        out[1:] = s.k * np.exp(-lam + j * math.log(lam) - gammaln(j + 1.0))
        return out
    fit = sgt_fit(s)
    out[1:] = fit.smoothed(l[1:])
    return out


def sgt_probabilities(s: SampleSummary) -> tuple[float, dict[int, float]]:
    """Simple Good-Turing: unseen mass and per-species probability by frequency.

    Turing estimates ``(r+1) m_{r+1} / m_r`` are used for small ``r`` until
    they first fall within 1.96 standard deviations of the fitted-line
    estimate, after which the line is used. Probabilities of seen species are
    rescaled to total ``1 - m_1 / n``.
    """
    fit = sgt_fit(s)
    spec = s.spectrum
    rstar: dict[int, float] = {}
    use_line = False
    for r, nr in s.spectrum_items:
        y = (r + 1) * float(fit.smoothed(r + 1) / fit.smoothed(r))
        nr1 = spec.get(r + 1, 0)
        if nr1 == 0:
            use_line = True
        if not use_line:
            x = (r + 1) * nr1 / nr
            sd = math.sqrt((r + 1) ** 2 * (nr1 / nr**2) * (1.0 + nr1 / nr))
            if abs(x - y) <= 1.96 * sd:
                use_line = True
            else:
                rstar[r] = x
                continue
        rstar[r] = y
    p0 = s.m(1) / s.n
    total = math.fsum(nr * rstar[r] for r, nr in s.spectrum_items)
    probs = {r: (1.0 - p0) * rstar[r] / total for r, _ in s.spectrum_items}
    return p0, probs


def smoothed_good_turing(rule: SmoothingRule, s: SampleSummary, l: int) -> DiscoveryEstimate:
    """Good-Turing with smoothed counts, ``(l + 1) m'_{l+1} / n``.

    For ``rule.variant == "sgt"`` the Simple Good-Turing probabilities are
    used: ``m_1 / n`` at ``l = 0`` and ``m_l p_l`` otherwise.
    """
    l = _check_l(s, 0, l)
    if rule.variant == "sgt":
        p0, probs = sgt_probabilities(s)
        value = p0 if l == 0 else s.m(l) * probs.get(l, 0.0)
    else:
        mp = smooth_spectrum(rule, s, lmax=l + 1)
        value = (l + 1) * mp[l + 1] / s.n
    return DiscoveryEstimate(rule.tag, s.n, 0, l, float(value))


# ---------------------------------------------------------------------------
# whole-profile evaluation and error metric
# ---------------------------------------------------------------------------


def discovery_profile(estimator: str, s: SampleSummary, params: PdParams | None = None) -> dict[int, float]:
    """(0; l)-discovery estimates for every ``l = 0..n`` with a nonzero value.

    ``estimator`` is ``"bnp"``, ``"gt"``, ``"pd-smooth"``,
    ``"poisson-smooth"`` or ``"sgt"``. ``params`` is needed for ``"bnp"`` and
    supplies sigma for ``"pd-smooth"``.
    """
    n = s.n
    if estimator == "bnp":
        out = {0: bnp_discovery(params, s, 0, 0).value}
        for l, ml in s.spectrum_items:
            out[l] = ml * (l - params.sigma) / (params.theta + n)
        return out
    if estimator == "gt":
        return {l - 1: l * ml / n for l, ml in s.spectrum_items}
    if estimator == "sgt":
        p0, probs = sgt_probabilities(s)
        out = {0: p0}
        out.update({l: ml * probs[l] for l, ml in s.spectrum_items})
        return out
    if estimator in ("pd-smooth", "poisson-smooth"):
        rule = SmoothingRule.pd(params.sigma) if estimator == "pd-smooth" else SmoothingRule.poisson()
        mp = smooth_spectrum(rule, s, lmax=n + 1)
        vals = np.arange(1, n + 2) * mp[1:] / n
        return {l: float(v) for l, v in enumerate(vals) if v != 0.0}
    raise ValueError(f"unknown estimator {estimator!r}")


def sse(estimates: Mapping[int, float], truths: Mapping[int, float], n: int | None = None) -> float:
    """Sum of squared errors over the union of keys; absent entries count as 0.

    If ``n`` is given only ``l = 0..n`` contributes.
    """
    keys = set(estimates) | set(truths)
    if n is not None:
        keys = {l for l in keys if 0 <= l <= n}
    return math.fsum((estimates.get(l, 0.0) - truths.get(l, 0.0)) ** 2 for l in keys)


__all__ = [
    "OutOfRange",
    "InvalidTarget",
    "InsufficientSpectrum",
    "bnp_discovery",
    "bnp_discovery_via_identity",
    "bnp_cumulative",
    "expected_new_species",
    "expected_freq_count",
    "good_turing",
    "good_toulmin",
    "SmoothingRule",
    "pd_coefficients",
    "sgt_fit",
    "sgt_probabilities",
    "smooth_spectrum",
    "smoothed_good_turing",
    "discovery_profile",
    "sse",
    "normalize_targets",
]
