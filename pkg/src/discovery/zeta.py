"""Zeta populations and ground-truth discovery probabilities.

A Zeta(s) population puts mass ``z**(-s) / zeta(s)`` on species ``z = 1, 2, ...``.
Samples are drawn with numpy's exact Zipf generator (unbounded support) and
keep their labels so the true (0; l)-discovery of the sample can be computed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import zeta as _hurwitz_zeta

from .rng import as_generator
from .summary import SampleSummary, from_raw_tokens


class UnknownSpecies(KeyError):
    """A sampled label has no probability in the supplied population."""


@dataclass(frozen=True)
class ZetaPopulation:
    """Read-only mapping ``species -> probability`` for the Zeta(s) law."""

    s: float

    def __post_init__(self):
        if not self.s > 1.0:
            raise ValueError(f"Zeta parameter must exceed 1, got {self.s}")

    @property
    def normalizer(self) -> float:
        return float(_hurwitz_zeta(self.s, 1.0))

    def __getitem__(self, label) -> float:
        if isinstance(label, bool) or not isinstance(label, (int, np.integer)) or label < 1:
            raise KeyError(label)
        return float(label) ** (-self.s) / self.normalizer

    def get(self, label, default=None):
        try:
            return self[label]
        except KeyError:
            return default


def zeta_sample(s_param: float, n: int, rng=None) -> tuple[SampleSummary, ZetaPopulation]:
    """``n`` iid Zeta(s) labels summarised with their labels retained."""
    pop = ZetaPopulation(float(s_param))
    if n < 1:
        raise ValueError("n must be >= 1")
    gen = as_generator(rng)
    draws = gen.zipf(pop.s, size=int(n))
    return from_raw_tokens([int(z) for z in draws]), pop


def true_discovery(population, s: SampleSummary, l: int) -> float:
    """True (0; l)-discovery of a labelled sample drawn from ``population``.

    ``l = 0`` gives the unseen mass ``1 - sum of observed p_i``; ``l >= 1``
    gives the total mass of species observed exactly ``l`` times.
    """
    if s.labels is None:
        raise ValueError("true_discovery needs a labelled sample (from_raw_tokens or zeta_sample)")
    probs = _label_probs(population, s)
    if l == 0:
        return 1.0 - math.fsum(p for p, _ in probs)
    return math.fsum(p for p, c in probs if c == l)


def true_discovery_profile(population, s: SampleSummary) -> dict[int, float]:
    """All nonzero true (0; l)-discoveries, ``l = 0..n``, in one pass."""
    if s.labels is None:
        raise ValueError("true_discovery needs a labelled sample (from_raw_tokens or zeta_sample)")
    probs = _label_probs(population, s)
    by_l: dict[int, list[float]] = {}
    for p, c in probs:
        by_l.setdefault(c, []).append(p)
    out = {0: 1.0 - math.fsum(p for p, _ in probs)}
    out.update({l: math.fsum(ps) for l, ps in sorted(by_l.items())})
    return out


def _label_probs(population, s: SampleSummary) -> list[tuple[float, int]]:
    out = []
    for label, count in s.labels:
        try:
            p = population[label]
        except (KeyError, IndexError) as exc:
            raise UnknownSpecies(label) from exc
        out.append((float(p), count))
    return out


__all__ = ["UnknownSpecies", "ZetaPopulation", "zeta_sample", "true_discovery", "true_discovery_profile"]
