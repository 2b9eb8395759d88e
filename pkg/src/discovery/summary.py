"""Sufficient statistics of a species sample.

A sample of ``n`` observations is reduced to the number of distinct species
``k``, the frequency spectrum ``{l: m_l}`` (number of species seen exactly
``l`` times, zeros omitted) and optionally the per-species counts.
"""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Hashable, Iterable, Mapping, Sequence


class SummaryError(ValueError):
    """Base class for ingestion errors."""


class EmptySample(SummaryError):
    pass


class DuplicateFrequency(SummaryError):
    pass


class InvalidSpectrum(SummaryError):
    pass


class NeedsFrequencies(SummaryError):
    """An operation needs per-species counts but the summary has none."""


def _freeze_spectrum(spectrum: Mapping[int, int]) -> tuple[tuple[int, int], ...]:
    return tuple(sorted((int(l), int(c)) for l, c in spectrum.items()))


@dataclass(frozen=True)
class SampleSummary:
    """Immutable sufficient statistics ``(n, k, spectrum, species_freqs)``.

    ``spectrum`` is stored as sorted ``(l, m_l)`` pairs with ``m_l >= 1``.
    ``species_freqs`` is a sorted tuple of per-species counts, or ``None``.
    ``labels`` optionally maps each observed label to its count; only
    ground-truth evaluation against a known population needs it.
    """

    n: int
    k: int
    spectrum_items: tuple[tuple[int, int], ...]
    species_freqs: tuple[int, ...] | None = None
    labels: tuple[tuple[Hashable, int], ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        prev = 0
        for l, c in self.spectrum_items:
            if l <= 0 or c <= 0:
                raise InvalidSpectrum(f"spectrum entries need l >= 1 and m_l >= 1, got ({l}, {c})")
            if l == prev:
                raise DuplicateFrequency(f"frequency {l} listed twice")
            prev = l
        if sum(l * c for l, c in self.spectrum_items) != self.n:
            raise InvalidSpectrum("sum of l * m_l does not equal n")
        if sum(c for _, c in self.spectrum_items) != self.k:
            raise InvalidSpectrum("sum of m_l does not equal k")
        if self.species_freqs is not None:
            f = self.species_freqs
            if len(f) != self.k or any(v < 1 for v in f) or sum(f) != self.n:
                raise InvalidSpectrum("species_freqs inconsistent with (n, k)")
            if _freeze_spectrum(Counter(f)) != self.spectrum_items:
                raise InvalidSpectrum("species_freqs induce a different spectrum")

    @property
    def spectrum(self) -> dict[int, int]:
        return dict(self.spectrum_items)

    def m(self, l: int) -> int:
        """Number of species with frequency exactly ``l`` (0 when absent)."""
        for key, c in self.spectrum_items:
            if key == l:
                return c
        return 0

    @property
    def max_frequency(self) -> int:
        return self.spectrum_items[-1][0]

    @property
    def has_freqs(self) -> bool:
        return self.species_freqs is not None

    def require_freqs(self) -> tuple[int, ...]:
        if self.species_freqs is None:
            raise NeedsFrequencies("this operation needs per-species frequencies")
        return self.species_freqs

    def with_freqs(self) -> "SampleSummary":
        """Copy with ``species_freqs`` materialised from the spectrum."""
        if self.species_freqs is not None:
            return self
        return SampleSummary(self.n, self.k, self.spectrum_items, _freqs_from_spectrum(self.spectrum_items), self.labels)


def _freqs_from_spectrum(items) -> tuple[int, ...]:
    out: list[int] = []
    for l, c in items:
        out.extend([l] * c)
    return tuple(out)


def from_counts(counts: Iterable[int]) -> SampleSummary:
    """Summary from per-species counts (each >= 1)."""
    freqs = tuple(sorted(int(c) for c in counts))
    if not freqs:
        raise EmptySample("no species")
    if freqs[0] < 1:
        raise InvalidSpectrum("species counts must be >= 1")
    return SampleSummary(sum(freqs), len(freqs), _freeze_spectrum(Counter(freqs)), freqs)


def from_raw_tokens(tokens: Sequence[Hashable]) -> SampleSummary:
    """Summary of a sequence of opaque species labels.

    >>> s = from_raw_tokens(["a", "a", "b"])
    >>> (s.n, s.k, s.spectrum)
    (3, 2, {1: 1, 2: 1})
    """
    counts = Counter(tokens)
    if not counts:
        raise EmptySample("empty token sequence")
    freqs = tuple(sorted(counts.values()))
    labels = tuple(counts.items())
    return SampleSummary(sum(freqs), len(freqs), _freeze_spectrum(Counter(freqs)), freqs, labels)


def from_spectrum(pairs: Iterable[tuple[int, int]], with_freqs: bool = False, n: int | None = None) -> SampleSummary:
    """Summary from ``(l, m_l)`` pairs.

    Raises :class:`DuplicateFrequency` on repeated ``l``,
    :class:`InvalidSpectrum` on non-positive entries or when a supplied ``n``
    disagrees with ``sum(l * m_l)``.
    """
    pairs = [(int(l), int(c)) for l, c in pairs]
    if not pairs:
        raise EmptySample("empty spectrum")
    seen = set()
    for l, c in pairs:
        if l in seen:
            raise DuplicateFrequency(f"frequency {l} listed twice")
        seen.add(l)
        if l <= 0 or c <= 0:
            raise InvalidSpectrum(f"need l >= 1 and m_l >= 1, got ({l}, {c})")
    items = tuple(sorted(pairs))
    total = sum(l * c for l, c in items)
    if n is not None and n != total:
        raise InvalidSpectrum(f"sum of l * m_l is {total}, caller says n = {n}")
    k = sum(c for _, c in items)
    freqs = _freqs_from_spectrum(items) if with_freqs else None
    return SampleSummary(total, k, items, freqs)


# ---------------------------------------------------------------------------
# file formats
# ---------------------------------------------------------------------------


def read_spectrum_csv(path_or_text, with_freqs: bool = True) -> SampleSummary:
    """Read a ``l,count`` CSV. Rows with ``count == 0`` are skipped."""
    text = _read_text(path_or_text)
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None or [h.strip() for h in header] != ["l", "count"]:
        raise InvalidSpectrum("spectrum CSV must start with header 'l,count'")
    pairs = []
    for row in reader:
        if not row or not "".join(row).strip():
            continue
        if len(row) != 2:
            raise InvalidSpectrum(f"bad row {row!r}")
        try:
            l, c = int(row[0]), int(row[1])
        except ValueError as exc:
            raise InvalidSpectrum(f"bad row {row!r}") from exc
        if c == 0:
            continue
        pairs.append((l, c))
    return from_spectrum(pairs, with_freqs=with_freqs)


def spectrum_csv(summary: SampleSummary) -> str:
    lines = ["l,count"] + [f"{l},{c}" for l, c in summary.spectrum_items]
    return "\n".join(lines) + "\n"


def write_spectrum_csv(summary: SampleSummary, path) -> None:
    Path(path).write_text(spectrum_csv(summary), encoding="utf-8", newline="\n")


def read_tokens(path_or_text) -> SampleSummary:
    """Newline-delimited labels; blank lines are ignored, labels are not normalised."""
    text = _read_text(path_or_text)
    tokens = [line for line in text.split("\n") if line != ""]
    return from_raw_tokens(tokens)


def _read_text(path_or_text) -> str:
    if isinstance(path_or_text, Path) or (isinstance(path_or_text, str) and "\n" not in path_or_text):
        return Path(path_or_text).read_text(encoding="utf-8")
    return str(path_or_text)


NAEGLERIA_LIBRARIES = ("aerobic", "anaerobic")


def naegleria_path(library: str) -> Path:
    """Path of the bundled Naegleria gruberi EST spectrum (``aerobic`` or ``anaerobic``)."""
    if library not in NAEGLERIA_LIBRARIES:
        raise ValueError(f"unknown library {library!r}; choose from {NAEGLERIA_LIBRARIES}")
    return Path(__file__).parent / "data" / f"naegleria_{library}.csv"


def load_naegleria(library: str) -> SampleSummary:
    return read_spectrum_csv(naegleria_path(library), with_freqs=True)
