"""SARI: n-gram add/keep/delete scoring of a system output.

The score compares a system output against both the input it simplified and
a single reference, over lowercased word n-gram *sets* for n = 1..4:

* keep  - predicted set I&O vs gold set I&R, F1-combined;
* add   - predicted set O-I vs gold set R-I, F1-combined;
* del   - predicted set I-O vs gold set I-R, precision only.

A ratio whose denominator set is empty is vacuously 1.0 when the other set
of the pair is also empty, else 0.0; the F1 of (0, 0) is 0. Per-operation
components are averaged over the four orders, and the total is 100 times
the mean of the three components.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateDocument
from .text_core import tokenize


@dataclass(frozen=True)
class SariOrderComponents:
    n: int
    f_keep: float
    f_add: float
    p_del: float


@dataclass(frozen=True)
class SariScore:
    total: float
    f_add: float
    f_keep: float
    p_del: float
    per_order: tuple[SariOrderComponents, ...]


def _words(text: str) -> list[str]:
    return [t.surface.lower() for t in tokenize(text) if t.is_word]


def ngram_sets(text: str, n: int) -> frozenset[tuple[str, ...]]:
    """Set of contiguous lowercased word n-grams; empty when too short."""
    if not 1 <= n <= 4:
        raise ValueError(f"n must be in 1..4, got {n}")
    words = _words(text)
    return frozenset(tuple(words[i:i + n]) for i in range(len(words) - n + 1))


def _ratio(numerator: frozenset, denominator: frozenset, other: frozenset) -> float:
    if not denominator:
        return 1.0 if not other else 0.0
    return len(numerator) / len(denominator)


def _f1(p: float, r: float) -> float:
    if p + r == 0.0:
        return 0.0
    return 2.0 * p * r / (p + r)


def sari(input_text: str, output_text: str, reference_text: str) -> SariScore:
    """Score ``output_text`` against ``input_text`` and ``reference_text``.

    The input must contain at least one word; output and reference may be
    empty (their n-gram sets are then empty and the vacuous-ratio rules
    apply).
    """
    if not _words(input_text):
        raise DegenerateDocument("SARI undefined on an input with no words")

    per_order = []
    for n in range(1, 5):
        i_set = ngram_sets(input_text, n)
        o_set = ngram_sets(output_text, n)
        r_set = ngram_sets(reference_text, n)

        kept, keep_gold = i_set & o_set, i_set & r_set
        keep_p = _ratio(kept & r_set, kept, keep_gold)
        keep_r = _ratio(kept & keep_gold, keep_gold, kept)

        added, add_gold = o_set - i_set, r_set - i_set
        add_p = _ratio(added & r_set, added, add_gold)
        add_r = _ratio(added & add_gold, add_gold, added)

        deleted, del_gold = i_set - o_set, i_set - r_set
        del_p = _ratio(deleted & del_gold, deleted, del_gold)

        per_order.append(SariOrderComponents(
            n=n, f_keep=_f1(keep_p, keep_r), f_add=_f1(add_p, add_r), p_del=del_p,
        ))

    f_keep = sum(c.f_keep for c in per_order) / 4.0
    f_add = sum(c.f_add for c in per_order) / 4.0
    p_del = sum(c.p_del for c in per_order) / 4.0
    total = 100.0 * (f_add + f_keep + p_del) / 3.0
    return SariScore(total=total, f_add=f_add, f_keep=f_keep, p_del=p_del,
                     per_order=tuple(per_order))
