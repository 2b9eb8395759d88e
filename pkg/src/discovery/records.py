"""Result records shared by the estimators, intervals and the CLI.

Records serialise to plain dicts (JSON) or flat rows (CSV). Floats are
written with ``repr`` so identical inputs give byte-identical files.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

Target = int | tuple[int, ...]


@dataclass(frozen=True)
class CredibleInterval:
    """Equal-tailed credible interval ``(lo, hi)`` at ``level``.

    ``method`` is one of ``"asymptotic-naive"``, ``"asymptotic-rstar"`` or
    ``"exact-pmf"``; ``draws`` is the Monte Carlo size (0 for exact intervals).
    """

    lo: float
    hi: float
    level: float
    method: str
    draws: int = 0

    def __post_init__(self):
        if not 0.0 <= self.lo <= self.hi:
            raise ValueError(f"need 0 <= lo <= hi, got ({self.lo}, {self.hi})")
        if not 0.0 < self.level < 1.0:
            raise ValueError(f"level must lie in (0, 1), got {self.level}")

    def to_dict(self) -> dict:
        return {"lo": self.lo, "hi": self.hi, "level": self.level, "method": self.method, "draws": self.draws}


@dataclass(frozen=True)
class DiscoveryEstimate:
    """Point estimate of an (m; l)-discovery or of a cumulative target.

    ``target`` is an int for a single frequency ``l`` and a tuple for a
    set of frequencies. ``unstable`` marks Good-Toulmin values outside
    their reliable range.
    """

    estimator: str
    n: int
    m: int
    target: Target
    value: float
    unstable: bool = False
    interval: CredibleInterval | None = None

    @property
    def is_cumulative(self) -> bool:
        return isinstance(self.target, tuple)

    def with_interval(self, interval: CredibleInterval) -> "DiscoveryEstimate":
        return DiscoveryEstimate(self.estimator, self.n, self.m, self.target, self.value, self.unstable, interval)

    def to_dict(self) -> dict:
        out = {"estimator": self.estimator, "n": self.n, "m": self.m}
        if self.is_cumulative:
            out["ls"] = list(self.target)
        else:
            out["l"] = self.target
        out["value"] = self.value
        if self.unstable:
            out["unstable"] = True
        if self.interval is not None:
            out["interval"] = self.interval.to_dict()
        return out


CSV_FIELDS = ("estimator", "n", "m", "target", "value", "unstable", "lo", "hi", "level", "method", "draws")


def target_label(target: Target) -> str:
    if isinstance(target, tuple):
        return "{" + ";".join(str(l) for l in target) + "}"
    return str(target)


def estimate_row(e: DiscoveryEstimate) -> list:
    iv = e.interval
    return [
        e.estimator,
        e.n,
        e.m,
        target_label(e.target),
        repr(e.value),
        int(e.unstable),
        "" if iv is None else repr(iv.lo),
        "" if iv is None else repr(iv.hi),
        "" if iv is None else repr(iv.level),
        "" if iv is None else iv.method,
        "" if iv is None else iv.draws,
    ]


def header_lines(config: dict, seed: int | None) -> list[str]:
    """Comment lines recording the run configuration and seed."""
    return [
        "# config: " + json.dumps(config, sort_keys=True, separators=(",", ":")),
        f"# seed: {'none (deterministic)' if seed is None else seed}",
    ]


def render_table(
    fields: Sequence[str],
    rows: Iterable[Sequence],
    config: dict,
    seed: int | None,
    fmt: str = "csv",
) -> str:
    """Render rows as CSV with ``#`` header comments, or as a JSON document.

    The JSON document has ``config``, ``seed`` and ``records`` keys; JSON has
    no comment syntax so the header travels as data.
    """
    rows = [list(r) for r in rows]
    if fmt == "csv":
        buf = io.StringIO()
        for line in header_lines(config, seed):
            buf.write(line + "\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(fields)
        w.writerows(rows)
        return buf.getvalue()
    if fmt == "json":
        records = [dict(zip(fields, r)) for r in rows]
        return json.dumps({"config": config, "seed": seed, "records": records}, indent=2, sort_keys=True) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def render_estimates(estimates: Iterable[DiscoveryEstimate], config: dict, seed: int | None, fmt: str = "csv") -> str:
    estimates = list(estimates)
    if fmt == "json":
        doc = {"config": config, "seed": seed, "records": [e.to_dict() for e in estimates]}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    return render_table(CSV_FIELDS, (estimate_row(e) for e in estimates), config, seed, fmt)
