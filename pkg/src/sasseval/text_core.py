"""Deterministic tokenization, sentence segmentation, and syllable counting.

Every surface metric in the toolkit (readability formulas, lexicon ratios,
SARI n-grams) is computed over the token and sentence units produced here,
so the rules are deliberately simple, rule-based, and bit-stable:

* words are maximal alphanumeric runs, with internal hyphens/apostrophes
  kept inside the token ("state-of-the-art" is one word);
* sentence boundaries fire at ``.``, ``!``, ``?`` followed by whitespace and
  an uppercase or opening character, unless the period closes a known
  abbreviation ("Dr.", "et al.", ...);
* syllables are vowel groups (a, e, i, o, u, y) with a silent trailing-e
  adjustment and a floor of one.

Input is normalized to NFC; non-ASCII letters count as letters.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources as importlib_resources
from pathlib import Path

from .errors import DegenerateDocument, MalformedResource, MissingResource

# Maximal alphanumeric run, allowing single internal hyphens/apostrophes.
# [^\W_] is "unicode word char minus underscore", i.e. letters and digits.
_WORD_RE = re.compile(r"[^\W_]+(?:['’-][^\W_]+)*", re.UNICODE)
_TOKEN_RE = re.compile(r"[^\W_]+(?:['’-][^\W_]+)*|\S", re.UNICODE)

_TERMINATOR_RUN_RE = re.compile(r"[.!?]+")
_OPENERS = set("\"'“‘«([{")

_VOWELS = frozenset("aeiouy")

_ABBREV_RESOURCE = "abbreviations.txt"


@dataclass(frozen=True)
class Token:
    """One surface token; ``char_count`` counts letters and digits only."""

    surface: str
    char_count: int
    is_word: bool


@dataclass(frozen=True)
class Sentence:
    tokens: tuple[Token, ...]

    def __post_init__(self):
        if not any(t.is_word for t in self.tokens):
            raise ValueError("a sentence must contain at least one word token")

    @property
    def words(self) -> tuple[Token, ...]:
        return tuple(t for t in self.tokens if t.is_word)


@dataclass(frozen=True)
class AnalyzedDocument:
    sentences: tuple[Sentence, ...]
    n_sentences: int
    n_words: int
    n_chars: int
    n_syllables: int

    def word_surfaces(self) -> list[str]:
        return [t.surface for s in self.sentences for t in s.tokens if t.is_word]


def _make_token(surface: str) -> Token:
    char_count = sum(1 for ch in surface if ch.isalnum())
    return Token(surface=surface, char_count=char_count, is_word=char_count > 0)


def tokenize(text: str) -> list[Token]:
    """Split text into word and punctuation tokens.

    Concatenating the surfaces reproduces the non-whitespace content of the
    input, so no character is silently dropped. Empty input yields an empty
    list.
    """
    normalized = unicodedata.normalize("NFC", text)
    return [_make_token(m.group()) for m in _TOKEN_RE.finditer(normalized)]


def _parse_resource_lines(lines, version_fallback: str) -> tuple[frozenset[str], str]:
    entries = set()
    version = version_fallback
    for raw in lines:
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = re.match(r"#\s*version:\s*(\S+)", line)
            if m:
                version = m.group(1)
            continue
        entries.add(line)
    return frozenset(entries), version


def load_abbreviations(path: str | Path | None = None) -> frozenset[str]:
    """Load the sentence-boundary abbreviation list (one entry per line, '#' comments)."""
    if path is None:
        return _bundled_abbreviations()
    p = Path(path)
    if not p.exists():
        raise MissingResource(f"abbreviation list not found: {p}")
    try:
        text = p.read_text(encoding="utf-8")
    except (UnicodeDecodeError, OSError) as exc:
        raise MalformedResource(f"abbreviation list unreadable: {p}: {exc}") from exc
    entries, _ = _parse_resource_lines(text.splitlines(), "unversioned")
    return entries


@lru_cache(maxsize=1)
def _bundled_abbreviations() -> frozenset[str]:
    text = (importlib_resources.files("sasseval.resources") / _ABBREV_RESOURCE).read_text("utf-8")
    entries, _ = _parse_resource_lines(text.splitlines(), "bundled")
    return entries


def _ends_with_abbreviation(text: str, dot_end: int, abbreviations: frozenset[str]) -> bool:
    """True when text[:dot_end] (which ends with '.') closes a listed abbreviation."""
    head = text[:dot_end]
    lowered = head.lower()
    for abbrev in abbreviations:
        a = abbrev.lower()
        if not lowered.endswith(a):
            continue
        start = len(head) - len(abbrev)
        # Word boundary: the abbreviation must not be the tail of a longer word.
        if start == 0 or not head[start - 1].isalnum():
            return True
    return False


def segment_sentences(text: str, abbreviations: frozenset[str] | None = None) -> list[Sentence]:
    """Split text into sentences using terminator + capitalization rules.

    A boundary requires a ``.``, ``!`` or ``?`` run, then whitespace, then an
    uppercase or opening character. Periods that close an abbreviation from
    the (versioned) list never split. Text without a terminator is a single
    sentence. Fragments without any word token are merged into the previous
    sentence so the Sentence invariant always holds.
    """
    normalized = unicodedata.normalize("NFC", text)
    if abbreviations is None:
        abbreviations = _bundled_abbreviations()

    cut_points = []
    n = len(normalized)
    for m in _TERMINATOR_RUN_RE.finditer(normalized):
        end = m.end()
        j = end
        while j < n and normalized[j].isspace():
            j += 1
        if j == end or j >= n:
            continue  # no whitespace after the run, or nothing follows
        nxt = normalized[j]
        if not (nxt.isupper() or nxt in _OPENERS):
            continue
        if m.group() == "." and _ends_with_abbreviation(normalized, end, abbreviations):
            continue
        cut_points.append(end)

    spans = []
    prev = 0
    for cut in cut_points:
        spans.append(normalized[prev:cut])
        prev = cut
    spans.append(normalized[prev:])

    sentences: list[Sentence] = []
    pending: list[Token] = []
    for span in spans:
        tokens = pending + [_make_token(m.group()) for m in _TOKEN_RE.finditer(span)]
        pending = []
        if not tokens:
            continue
        if any(t.is_word for t in tokens):
            sentences.append(Sentence(tokens=tuple(tokens)))
        elif sentences:
            last = sentences.pop()
            sentences.append(Sentence(tokens=last.tokens + tuple(tokens)))
        else:
            pending = tokens  # punctuation before any sentence; carry forward
    return sentences


def count_syllables(word: str) -> int:
    """Count vowel groups with a silent trailing-e adjustment; at least 1.

    Consecutive vowels (a, e, i, o, u, y) form one group. A final 'e' drops
    one group when more than one remains. The heuristic is fixed; known
    errors on irregular words are accepted.
    """
    w = word.lower()
    count = 0
    prev_vowel = False
    for ch in w:
        is_vowel = ch in _VOWELS
        if is_vowel and not prev_vowel:
            count += 1
        prev_vowel = is_vowel
    if count > 1 and w.endswith("e"):
        count -= 1
    return max(count, 1)


def analyze(text: str, abbreviations: frozenset[str] | None = None) -> AnalyzedDocument:
    """Tokenize, segment, and count; raises DegenerateDocument on wordless input."""
    sentences = segment_sentences(text, abbreviations)
    words = [t for s in sentences for t in s.tokens if t.is_word]
    if not words:
        raise DegenerateDocument("document has no word tokens")
    return AnalyzedDocument(
        sentences=tuple(sentences),
        n_sentences=len(sentences),
        n_words=len(words),
        n_chars=sum(t.char_count for t in words),
        n_syllables=sum(count_syllables(t.surface) for t in words),
    )
