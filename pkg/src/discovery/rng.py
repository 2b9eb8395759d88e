"""Seeded random streams.

Every stochastic routine takes an explicit ``numpy.random.Generator``. The
helpers here build Philox (counter-based) generators from a root seed and a
stream index so that Monte Carlo work can be split into independent,
reproducible streams.
"""

from __future__ import annotations

import numpy as np

DEFAULT_SEED = 20150101


def make_rng(seed: int | None = None, stream: int = 0) -> np.random.Generator:
    """Philox generator for ``(seed, stream)``; identical inputs give identical draws."""
    if seed is None:
        seed = DEFAULT_SEED
    ss = np.random.SeedSequence(int(seed), spawn_key=(int(stream),))
    return np.random.Generator(np.random.Philox(ss))


def stream_plan(seed: int | None, count: int, n_streams: int = 1) -> list[tuple[np.random.Generator, int]]:
    """Split ``count`` replicates over ``n_streams`` streams.

    Returns ``(generator, allocation)`` pairs. Allocation is a deterministic
    function of ``count`` and ``n_streams`` (first streams take the remainder).
    """
    if n_streams < 1:
        raise ValueError("n_streams must be >= 1")
    base, extra = divmod(int(count), n_streams)
    return [(make_rng(seed, s), base + (1 if s < extra else 0)) for s in range(n_streams)]


def as_generator(rng) -> np.random.Generator:
    """Accept a Generator, an int seed, or None."""
    if isinstance(rng, np.random.Generator):
        return rng
    return make_rng(rng)
