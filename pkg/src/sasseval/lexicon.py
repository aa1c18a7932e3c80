"""Word-level accessibility resources: VOA vocabulary ratio and word frequency.

Two versioned resources back this module:

* a Special English vocabulary list (one lowercase word per line) for the
  log in/out ratio, smoothed with +0.5 on both counts so documents made
  entirely of in- or out-of-vocabulary words stay finite;
* a word -> frequency-per-billion-tokens TSV for word accessibility, the
  mean natural-log frequency of a document's words. Absent words fall back
  to ``floor_freq`` (default 1 per billion, contributing ln(1) = 0).

Lookups are case-insensitive; no stemming or lemmatization is applied.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources as importlib_resources
from pathlib import Path
from types import MappingProxyType
from typing import Mapping

from .errors import DegenerateDocument, MalformedResource, MissingResource
from .text_core import AnalyzedDocument

_VOA_RESOURCE = "voa1500.txt"
_FREQ_RESOURCE = "word_freq_per_billion.tsv"

_VERSION_RE = re.compile(r"#\s*version:\s*(\S+)")


@dataclass(frozen=True)
class VoaLexicon:
    entries: frozenset[str]
    source_id: str

    def __contains__(self, word: str) -> bool:
        return word.lower() in self.entries

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class FrequencyTable:
    frequencies: Mapping[str, float]
    floor_freq: float = 1.0
    source_id: str = "unversioned"

    def lookup(self, word: str) -> float:
        """Frequency per billion tokens; absent words return floor_freq."""
        return self.frequencies.get(word.lower(), self.floor_freq)


def _read_text(path: Path, what: str) -> str:
    if not path.exists():
        raise MissingResource(f"{what} not found: {path}")
    try:
        return path.read_text(encoding="utf-8")
    except (UnicodeDecodeError, OSError) as exc:
        raise MalformedResource(f"{what} unreadable as UTF-8 text: {path}: {exc}") from exc


def _parse_voa(text: str, source_id: str) -> VoaLexicon:
    entries = set()
    version = source_id
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _VERSION_RE.match(line)
            if m:
                version = m.group(1)
            continue
        if any(ch.isspace() for ch in line):
            continue  # multi-token entries are dropped; membership is single-word
        entries.add(line.lower())
    return VoaLexicon(entries=frozenset(entries), source_id=version)


def load_voa(path: str | Path) -> VoaLexicon:
    """Load a vocabulary list: one word per line, UTF-8, '#' comments, deduplicated."""
    p = Path(path)
    return _parse_voa(_read_text(p, "VOA lexicon"), p.name)


@lru_cache(maxsize=1)
def bundled_voa() -> VoaLexicon:
    text = (importlib_resources.files("sasseval.resources") / _VOA_RESOURCE).read_text("utf-8")
    return _parse_voa(text, _VOA_RESOURCE)


def _parse_freq_table(text: str, source_id: str, floor_freq: float) -> FrequencyTable:
    if floor_freq <= 0:
        raise ValueError("floor_freq must be positive")
    freqs: dict[str, float] = {}
    version = source_id
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _VERSION_RE.match(line)
            if m:
                version = m.group(1)
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise MalformedResource(f"frequency table line {line_no}: expected 2 columns")
        word, raw = parts
        try:
            freq = float(raw)
        except ValueError as exc:
            raise MalformedResource(f"frequency table line {line_no}: bad number {raw!r}") from exc
        if freq <= 0 or not math.isfinite(freq):
            raise MalformedResource(f"frequency table line {line_no}: frequency must be positive")
        freqs[word.lower()] = freq
    return FrequencyTable(frequencies=MappingProxyType(freqs), floor_freq=floor_freq,
                          source_id=version)


def load_frequency_table(path: str | Path, floor_freq: float = 1.0) -> FrequencyTable:
    """Load a two-column TSV (word, frequency per 10^9 tokens), UTF-8, lowercase keys."""
    p = Path(path)
    return _parse_freq_table(_read_text(p, "frequency table"), p.name, floor_freq)


@lru_cache(maxsize=1)
def bundled_frequency_table() -> FrequencyTable:
    text = (importlib_resources.files("sasseval.resources") / _FREQ_RESOURCE).read_text("utf-8")
    return _parse_freq_table(text, _FREQ_RESOURCE, 1.0)


def voa_log_ratio(doc: AnalyzedDocument, lex: VoaLexicon) -> float:
    """ln((in + 0.5) / (out + 0.5)) over the document's word tokens.

    Positive values mean more in-vocabulary than out-of-vocabulary words.
    The +0.5 smoothing keeps all-in and all-out documents finite.
    """
    words = doc.word_surfaces()
    if not words:
        raise DegenerateDocument("VOA ratio undefined on zero words")
    n_in = sum(1 for w in words if w.lower() in lex.entries)
    n_out = len(words) - n_in
    return math.log((n_in + 0.5) / (n_out + 0.5))


def word_accessibility(doc: AnalyzedDocument, table: FrequencyTable) -> float:
    """Mean ln(frequency per billion) of the document's words."""
    words = doc.word_surfaces()
    if not words:
        raise DegenerateDocument("word accessibility undefined on zero words")
    return sum(math.log(table.lookup(w)) for w in words) / len(words)


@dataclass(frozen=True)
class Resources:
    """The lexicon handles metric pipelines need, with their versions."""

    voa: VoaLexicon
    freq_table: FrequencyTable

    @classmethod
    def bundled(cls) -> "Resources":
        return cls(voa=bundled_voa(), freq_table=bundled_frequency_table())

    @property
    def versions(self) -> dict[str, str]:
        return {"voa": self.voa.source_id, "freq_table": self.freq_table.source_id}
