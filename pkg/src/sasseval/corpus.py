"""SASS corpus data model, statistics, prompt templates, and annotations.

The corpus ships as JSONL: one object per line with fields ``id``,
``abstract``, ``significance``, ``discipline``, ``split``. Split membership
is data; the toolkit validates it but never re-splits. Annotation records
(three-level Good/Acceptable/Poor rubric over language quality,
faithfulness, and completeness) load from CSV.
"""

from __future__ import annotations

import csv
import json
import logging
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from . import lexicon, readability, stats, text_core
from .errors import (DegenerateDocument, DuplicateId, InsufficientData, InvalidGrade,
                     MalformedRecord, MissingResource)

logger = logging.getLogger(__name__)

SPLITS = ("train", "validation", "test")
DIMENSIONS = ("language_quality", "faithfulness", "completeness")
GRADES = ("Good", "Acceptable", "Poor")

# Table-1 metric family, in column order, with display labels.
METRICS = ("ari", "fk", "voa", "sl", "wa", "wl")
METRIC_LABELS = {"ari": "ARI", "fk": "F-K", "sari": "SARI", "voa": "VOA",
                 "sl": "SL", "wa": "WA", "wl": "WL", "bs": "BS"}

INSTRUCTION_PREFIX = "Rewrite this abstract in plain English for middle school students: "
SUMMARY_PREFIX = "Lay summary:"


@dataclass(frozen=True)
class SassRecord:
    id: str
    abstract: str
    significance: str
    discipline: str
    split: str

    def __post_init__(self):
        if not self.id:
            raise ValueError("record id must be non-empty")
        if not self.abstract.strip():
            raise ValueError("abstract must be non-empty after trimming")
        if not self.significance.strip():
            raise ValueError("significance must be non-empty after trimming")
        if self.split not in SPLITS:
            raise ValueError(f"split must be one of {SPLITS}, got {self.split!r}")


@dataclass(frozen=True)
class MetricSummary:
    mean: float
    sd: float


@dataclass(frozen=True)
class CorpusStats:
    n_records: int
    abstract: Mapping[str, MetricSummary]
    significance: Mapping[str, MetricSummary]
    tests: Mapping[str, stats.SignificanceTest]
    resource_versions: Mapping[str, str]


@dataclass(frozen=True)
class AnnotationRecord:
    record_id: str
    dimension: str
    grade: str
    annotator: str
    note: str | None = None

    def __post_init__(self):
        if self.dimension not in DIMENSIONS:
            raise ValueError(f"dimension must be one of {DIMENSIONS}, got {self.dimension!r}")
        if self.grade not in GRADES:
            raise InvalidGrade(f"grade must be one of {GRADES}, got {self.grade!r}")


def load_corpus(path: str | Path) -> list[SassRecord]:
    """Load and validate a JSONL corpus; duplicate ids and bad records fail fast."""
    p = Path(path)
    if not p.exists():
        raise MissingResource(f"corpus file not found: {p}")
    records: list[SassRecord] = []
    seen: set[str] = set()
    with p.open("r", encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise MalformedRecord(line_no, "json", str(exc)) from exc
            if not isinstance(obj, dict):
                raise MalformedRecord(line_no, "json", "record is not an object")
            for field_name in ("id", "abstract", "significance", "discipline", "split"):
                if field_name not in obj:
                    raise MalformedRecord(line_no, field_name, "missing")
                if not isinstance(obj[field_name], str):
                    raise MalformedRecord(line_no, field_name, "not a string")
            if not obj["id"]:
                raise MalformedRecord(line_no, "id", "empty")
            if not obj["abstract"].strip():
                raise MalformedRecord(line_no, "abstract", "empty after trimming")
            if not obj["significance"].strip():
                raise MalformedRecord(line_no, "significance", "empty after trimming")
            if obj["split"] not in SPLITS:
                raise MalformedRecord(line_no, "split", f"unknown split {obj['split']!r}")
            record = SassRecord(id=obj["id"], abstract=obj["abstract"],
                                significance=obj["significance"],
                                discipline=obj["discipline"], split=obj["split"])
            if record.id in seen:
                raise DuplicateId(f"duplicate record id {record.id!r} at line {line_no}")
            seen.add(record.id)
            records.append(record)
    counts = split_counts(records)
    logger.info("loaded %d records from %s (splits: %s)", len(records), p,
                ", ".join(f"{k}={v}" for k, v in counts.items()))
    return records


def split_counts(records: Iterable[SassRecord]) -> dict[str, int]:
    counts = {split: 0 for split in SPLITS}
    for r in records:
        counts[r.split] += 1
    return counts


def document_metrics(text: str, resources: lexicon.Resources) -> dict[str, float]:
    """The six Table-1 surface metrics of one document."""
    doc = text_core.analyze(text)
    return {
        "ari": readability.ari(doc),
        "fk": readability.flesch_kincaid(doc),
        "voa": lexicon.voa_log_ratio(doc, resources.voa),
        "sl": readability.avg_sentence_length(doc),
        "wa": lexicon.word_accessibility(doc, resources.freq_table),
        "wl": readability.avg_word_length(doc),
    }


def corpus_stats(records: Sequence[SassRecord],
                 resources: lexicon.Resources | None = None,
                 alpha: float = 0.05) -> CorpusStats:
    """Per-category metric means/sds plus Bonferroni-corrected paired tests.

    Each abstract-significance pair contributes one paired observation per
    metric; the correction family is the six reported metrics.
    """
    if len(records) < 2:
        raise InsufficientData(f"corpus statistics require >= 2 records, got {len(records)}")
    if resources is None:
        resources = lexicon.Resources.bundled()

    abstract_cols: dict[str, list[float]] = {m: [] for m in METRICS}
    significance_cols: dict[str, list[float]] = {m: [] for m in METRICS}
    for record in records:
        a = document_metrics(record.abstract, resources)
        s = document_metrics(record.significance, resources)
        for m in METRICS:
            abstract_cols[m].append(a[m])
            significance_cols[m].append(s[m])

    paired = [stats.paired_t_test(abstract_cols[m], significance_cols[m]) for m in METRICS]
    tests = dict(zip(METRICS, stats.family_tests(paired, alpha=alpha)))

    def summarize(cols: dict[str, list[float]]) -> dict[str, MetricSummary]:
        return {m: MetricSummary(*stats.mean_sd(cols[m])) for m in METRICS}

    return CorpusStats(
        n_records=len(records),
        abstract=summarize(abstract_cols),
        significance=summarize(significance_cols),
        tests=tests,
        resource_versions=resources.versions,
    )


def discipline_histogram(records: Sequence[SassRecord],
                         min_count: int = 3) -> list[tuple[str, int]]:
    """Per-discipline counts, descending; bins below ``min_count`` are omitted."""
    counts = Counter(r.discipline for r in records)
    kept = [(d, c) for d, c in counts.items() if c >= min_count]
    kept.sort(key=lambda item: (-item[1], item[0]))
    return kept


def render_training_example(record: SassRecord) -> str:
    """Byte-stable fine-tuning template pairing the abstract with its target."""
    return (f"{INSTRUCTION_PREFIX}{record.abstract}\n"
            f"{SUMMARY_PREFIX} {record.significance}")


def render_inference_prompt(abstract: str) -> str:
    """The training template truncated immediately after the summary cue."""
    if not abstract.strip():
        raise DegenerateDocument("cannot render a prompt for an empty abstract")
    return f"{INSTRUCTION_PREFIX}{abstract}\n{SUMMARY_PREFIX}"


def load_annotations(path: str | Path) -> list[AnnotationRecord]:
    """Load annotation records from CSV (record_id, dimension, grade, annotator, note)."""
    p = Path(path)
    if not p.exists():
        raise MissingResource(f"annotation file not found: {p}")
    records: list[AnnotationRecord] = []
    with p.open("r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        required = {"record_id", "dimension", "grade", "annotator"}
        if reader.fieldnames is None or not required.issubset(reader.fieldnames):
            raise MalformedRecord(1, "header",
                                  f"expected columns {sorted(required)}, got {reader.fieldnames}")
        for line_no, row in enumerate(reader, start=2):
            if row["dimension"] not in DIMENSIONS:
                raise MalformedRecord(line_no, "dimension", f"unknown {row['dimension']!r}")
            note = row.get("note") or None
            records.append(AnnotationRecord(record_id=row["record_id"],
                                            dimension=row["dimension"],
                                            grade=row["grade"],
                                            annotator=row["annotator"],
                                            note=note))
    return records


def aggregate_annotations(records: Iterable[AnnotationRecord]) -> dict[str, dict[str, int]]:
    """Counts per (dimension, grade); every rubric cell is present, zero-filled."""
    counts: dict[str, dict[str, int]] = {d: {g: 0 for g in GRADES} for d in DIMENSIONS}
    for r in records:
        counts[r.dimension][r.grade] += 1
    return counts
