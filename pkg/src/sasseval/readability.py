"""Grade-level readability formulas and surface-length statistics.

ARI combines characters-per-word with words-per-sentence; Flesch-Kincaid
combines syllables-per-word with words-per-sentence. Both return US grade
levels and are reported unclamped so corpus means stay unbiased.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateDocument
from .text_core import AnalyzedDocument

K12 = "K-12"
COLLEGE = "College"
ADVANCED = "Advanced"


@dataclass(frozen=True)
class ReadabilityScores:
    ari: float
    fk: float
    avg_sentence_len: float
    avg_word_len: float


def _check(doc: AnalyzedDocument) -> None:
    if doc.n_words <= 0 or doc.n_sentences <= 0:
        raise DegenerateDocument("readability undefined on zero words or sentences")


def ari(doc: AnalyzedDocument) -> float:
    """Automated Readability Index: 4.71*chars/word + 0.5*words/sentence - 21.43."""
    _check(doc)
    return 4.71 * (doc.n_chars / doc.n_words) + 0.5 * (doc.n_words / doc.n_sentences) - 21.43


def flesch_kincaid(doc: AnalyzedDocument) -> float:
    """Flesch-Kincaid grade: 0.39*words/sentence + 11.8*syllables/word - 15.59."""
    _check(doc)
    return 0.39 * (doc.n_words / doc.n_sentences) + 11.8 * (doc.n_syllables / doc.n_words) - 15.59


def avg_sentence_length(doc: AnalyzedDocument) -> float:
    _check(doc)
    return doc.n_words / doc.n_sentences


def avg_word_length(doc: AnalyzedDocument) -> float:
    _check(doc)
    return doc.n_chars / doc.n_words


def grade_band(score: float) -> str:
    """Map a grade-level score to K-12 (<14), College (14-18), or Advanced (>=19)."""
    if score < 14.0:
        return K12
    if score < 19.0:
        return COLLEGE
    return ADVANCED


def readability_scores(doc: AnalyzedDocument) -> ReadabilityScores:
    _check(doc)
    return ReadabilityScores(
        ari=ari(doc),
        fk=flesch_kincaid(doc),
        avg_sentence_len=avg_sentence_length(doc),
        avg_word_len=avg_word_length(doc),
    )
