"""Batch evaluation, model-comparison reporting, and the zero-shot client.

``evaluate_batch`` scores one system's outputs over the test split: the six
surface metrics for both the originals and the outputs, SARI against
(input, reference), and optionally greedy-match F1 against the reference
when an embedding provider is configured. Paired two-tailed t-tests compare
the system to the original abstracts on the surface metrics only (the
family excludes SARI and the embedding score), Bonferroni-corrected at the
model-wise level.

The zero-shot client speaks an OpenAI-style chat-completions protocol and
expects the flat single-key JSON contract from the simplifier.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

import requests

from . import corpus, lexicon, sari as sari_mod, semantic, stats, text_core
from .errors import (BatchEvaluationError, DegenerateDocument, DegenerateVariance,
                     EndpointError, InsufficientData, MissingKey, MissingOutput,
                     NestedStructure, NonStringValue, NotJson, ProviderUnavailable,
                     SassevalError, TextTooLong)

ORIGINAL = "original"
SYSTEM_OUTPUT = "system_output"

# Column order of the comparison table; the first six form the test family.
TESTED_METRICS = corpus.METRICS  # ("ari", "fk", "voa", "sl", "wa", "wl")
ALL_METRICS = ("ari", "fk", "sari", "voa", "sl", "wa", "wl", "bs")

SIMPLIFIER_SYSTEM_PROMPT = (
    'You are a helpful assistant designed to output JSON with a single key '
    '"simplified_version". Ensure there is no nesting in the JSON structure.'
)

# Two decimals for the log-ratio and similarity columns, one elsewhere,
# mirroring the comparison tables this module reproduces.
_DECIMALS = {"voa": 2, "bs": 2}


@dataclass(frozen=True)
class MetricRow:
    record_id: str
    provenance: str  # ORIGINAL or SYSTEM_OUTPUT
    ari: float
    fk: float
    voa: float
    sl: float
    wa: float
    wl: float
    sari: float | None = None
    bs: float | None = None
    bs_error: str | None = None

    def __post_init__(self):
        if self.provenance not in (ORIGINAL, SYSTEM_OUTPUT):
            raise ValueError(f"unknown provenance {self.provenance!r}")
        if self.provenance == ORIGINAL and (self.sari is not None or self.bs is not None):
            raise ValueError("sari/bs require input/reference context; "
                             "original rows cannot carry them")

    def metric(self, name: str) -> float | None:
        return getattr(self, name)


@dataclass(frozen=True)
class ComparisonReport:
    system_id: str
    n_records: int
    system: Mapping[str, corpus.MetricSummary]      # keys: present ALL_METRICS
    original: Mapping[str, corpus.MetricSummary]    # keys: TESTED_METRICS
    tests: Mapping[str, stats.SignificanceTest]     # keys: tested subset
    test_notes: Mapping[str, str]                   # metric -> reason it went untested
    resource_versions: Mapping[str, str]
    provider_id: str | None = None
    embed_layer: int | None = None
    rows: tuple[MetricRow, ...] = ()
    bs_failures: Mapping[str, str] = field(default_factory=dict)  # record_id -> reason


def original_row(record_id: str, abstract: str,
                 resources: lexicon.Resources) -> MetricRow:
    m = corpus.document_metrics(abstract, resources)
    return MetricRow(record_id=record_id, provenance=ORIGINAL, **m)


def evaluate_pair(abstract: str, system_output: str, reference: str,
                  resources: lexicon.Resources,
                  provider: semantic.EmbeddingProvider | None = None,
                  record_id: str = "") -> MetricRow:
    """All eight metrics for one system output.

    SARI scores the output against the abstract (input) and the reference;
    the embedding score compares the output to the reference. A failed
    embedding cell is recorded as absent with its reason, never as zero.
    """
    if not any(t.is_word for t in text_core.tokenize(reference)):
        raise DegenerateDocument("reference has no word tokens")
    m = corpus.document_metrics(system_output, resources)
    sari_score = sari_mod.sari(abstract, system_output, reference)
    bs: float | None = None
    bs_error: str | None = None
    if provider is not None:
        try:
            cand = provider.embed(system_output)
            ref = provider.embed(reference)
            bs = semantic.bertscore(cand, ref).f1
        except (ProviderUnavailable, TextTooLong) as exc:
            bs_error = f"{type(exc).__name__}: {exc}"
    return MetricRow(record_id=record_id, provenance=SYSTEM_OUTPUT,
                     sari=sari_score.total, bs=bs, bs_error=bs_error, **m)


def evaluate_batch(corpus_test: Sequence[corpus.SassRecord],
                   outputs: Mapping[str, str],
                   system_id: str,
                   resources: lexicon.Resources | None = None,
                   provider: semantic.EmbeddingProvider | None = None,
                   alpha: float = 0.05,
                   workers: int = 1) -> ComparisonReport:
    """Score one system over the test records and compare it to the originals."""
    if not corpus_test:
        raise InsufficientData("empty test set")
    if resources is None:
        resources = lexicon.Resources.bundled()
    missing = [r.id for r in corpus_test if r.id not in outputs]
    if missing:
        raise MissingOutput(missing)

    def score(record: corpus.SassRecord) -> tuple[MetricRow, MetricRow]:
        orig = original_row(record.id, record.abstract, resources)
        sys_row = evaluate_pair(record.abstract, outputs[record.id],
                                record.significance, resources,
                                provider=provider, record_id=record.id)
        return orig, sys_row

    failures: dict[str, str] = {}
    pairs: dict[str, tuple[MetricRow, MetricRow]] = {}
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = {r.id: pool.submit(score, r) for r in corpus_test}
        for rid, fut in futures.items():
            try:
                pairs[rid] = fut.result()
            except SassevalError as exc:
                failures[rid] = f"{type(exc).__name__}: {exc}"
    else:
        for record in corpus_test:
            try:
                pairs[record.id] = score(record)
            except SassevalError as exc:
                failures[record.id] = f"{type(exc).__name__}: {exc}"
    if failures:
        raise BatchEvaluationError(failures)

    # Deterministic reduction in corpus order, independent of worker timing.
    originals = [pairs[r.id][0] for r in corpus_test]
    sys_rows = [pairs[r.id][1] for r in corpus_test]

    tests: dict[str, stats.SignificanceTest] = {}
    notes: dict[str, str] = {}
    testable: list[str] = []
    paired_results: list[stats.PairedT] = []
    for name in TESTED_METRICS:
        xs = [row.metric(name) for row in sys_rows]
        ys = [row.metric(name) for row in originals]
        diffs = [x - y for x, y in zip(xs, ys)]
        if all(d == 0.0 for d in diffs):
            notes[name] = "no change"
            continue
        try:
            paired_results.append(stats.paired_t_test(xs, ys))
            testable.append(name)
        except (InsufficientData, DegenerateVariance) as exc:
            notes[name] = f"untested: {type(exc).__name__}"
    if testable:
        for name, test in zip(testable, stats.family_tests(paired_results, alpha=alpha)):
            tests[name] = test

    def summarize(rows: Sequence[MetricRow], names: Sequence[str]):
        out: dict[str, corpus.MetricSummary] = {}
        for name in names:
            values = [row.metric(name) for row in rows if row.metric(name) is not None]
            if values:
                out[name] = corpus.MetricSummary(*stats.mean_sd(values))
        return out

    bs_failures = {row.record_id: row.bs_error for row in sys_rows if row.bs_error}
    return ComparisonReport(
        system_id=system_id,
        n_records=len(corpus_test),
        system=summarize(sys_rows, ALL_METRICS),
        original=summarize(originals, TESTED_METRICS),
        tests=tests,
        test_notes=notes,
        resource_versions=dict(resources.versions),
        provider_id=_provider_identity(provider) if provider is not None else None,
        embed_layer=getattr(provider, "layer", None) if provider is not None else None,
        rows=tuple(originals) + tuple(sys_rows),
        bs_failures=bs_failures,
    )


def _provider_identity(provider) -> str | None:
    for attr in ("provider_id", "model_id", "endpoint"):
        value = getattr(provider, attr, None)
        if value:
            return str(value)
    return None


def extract_simplified(payload: bytes | str) -> str:
    """Extract the simplified text from the flat single-key JSON contract."""
    if isinstance(payload, bytes):
        try:
            payload = payload.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise NotJson(f"payload is not UTF-8 text: {exc}") from exc
    try:
        obj = json.loads(payload)
    except json.JSONDecodeError as exc:
        raise NotJson(f"payload is not JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise NotJson(f"payload is JSON but not an object: {type(obj).__name__}")
    for key, value in obj.items():
        if isinstance(value, (dict, list)):
            raise NestedStructure(f"key {key!r} holds a nested {type(value).__name__}")
    if "simplified_version" not in obj:
        raise MissingKey('payload lacks the key "simplified_version"')
    value = obj["simplified_version"]
    if not isinstance(value, str):
        raise NonStringValue(f'"simplified_version" is {type(value).__name__}, not a string')
    return value


@dataclass
class EndpointConfig:
    """Chat-completions endpoint settings; credentials come from the environment."""

    url: str
    model: str = ""
    timeout: float = 60.0
    max_attempts: int = 3
    backoff_base: float = 1.0
    max_new_tokens: int | None = None
    api_key: str | None = None  # populated from the environment by the CLI


def request_simplification(abstract: str, config: EndpointConfig,
                           post: Callable[..., requests.Response] | None = None,
                           sleep: Callable[[float], None] = time.sleep) -> str:
    """Query the zero-shot simplifier for one abstract at temperature zero.

    The system prompt is the flat-JSON contract; the user message is the
    inference prompt. Transport failures and non-JSON payloads are retried
    with exponential backoff up to ``max_attempts``; contract violations in
    well-formed JSON (missing key, nesting, non-string value) are raised
    immediately.
    """
    prompt = corpus.render_inference_prompt(abstract)
    body = {
        "model": config.model,
        "messages": [
            {"role": "system", "content": SIMPLIFIER_SYSTEM_PROMPT},
            {"role": "user", "content": prompt},
        ],
        "temperature": 0,
    }
    if config.max_new_tokens is not None:
        body["max_tokens"] = config.max_new_tokens
    headers = {"Content-Type": "application/json"}
    if config.api_key:
        headers["Authorization"] = f"Bearer {config.api_key}"
    do_post = post if post is not None else requests.post

    last_error = "no attempts made"
    last_payload = None
    for attempt in range(config.max_attempts):
        if attempt:
            sleep(config.backoff_base * (2 ** (attempt - 1)))
        try:
            resp = do_post(config.url, json=body, headers=headers, timeout=config.timeout)
        except requests.RequestException as exc:
            last_error = f"transport failure: {exc}"
            continue
        if resp.status_code >= 500:
            last_error = f"server error HTTP {resp.status_code}"
            last_payload = resp.text
            continue
        if resp.status_code != 200:
            raise EndpointError(f"endpoint rejected the request: HTTP {resp.status_code}",
                                last_payload=resp.text)
        try:
            envelope = resp.json()
            content = envelope["choices"][0]["message"]["content"]
        except (ValueError, KeyError, IndexError, TypeError) as exc:
            last_error = f"malformed completion envelope: {exc}"
            last_payload = resp.text
            continue
        try:
            return extract_simplified(content)
        except NotJson as exc:
            last_error = f"payload not JSON: {exc}"
            last_payload = content
            continue
        # MissingKey / NestedStructure / NonStringValue propagate: retrying a
        # well-formed but contract-violating answer is pointless.
    raise EndpointError(f"simplifier failed after {config.max_attempts} attempts: {last_error}",
                        last_payload=last_payload)


def _fmt(name: str, value: float | None, significant: bool = False) -> str:
    if value is None:
        return "-"
    text = f"{value:.{_DECIMALS.get(name, 1)}f}"
    return text + "*" if significant else text


def _cells(report: ComparisonReport) -> list[tuple[str, dict[str, tuple[str, str]]]]:
    """Rows of (label, {metric: (mean_text, sd_text)}) for table emission."""
    rows = []
    orig = {}
    for name in ALL_METRICS:
        summary = report.original.get(name)
        orig[name] = (_fmt(name, summary.mean if summary else None),
                      _fmt(name, summary.sd if summary else None))
    rows.append(("original", orig))
    system = {}
    for name in ALL_METRICS:
        summary = report.system.get(name)
        significant = name in report.tests and report.tests[name].significant
        system[name] = (_fmt(name, summary.mean if summary else None, significant),
                        _fmt(name, summary.sd if summary else None))
    rows.append((report.system_id, system))
    return rows


def emit_report(report: ComparisonReport, format: str = "markdown") -> bytes:
    """Render the comparison deterministically as markdown, CSV, or JSON."""
    if format == "markdown":
        return _emit_markdown(report)
    if format == "csv":
        return _emit_csv(report)
    if format == "json":
        return _emit_json(report)
    raise ValueError(f"unknown report format: {format!r}")


def _emit_markdown(report: ComparisonReport) -> bytes:
    header = ["system"] + [corpus.METRIC_LABELS[m] for m in ALL_METRICS]
    lines = ["| " + " | ".join(header) + " |",
             "| " + " | ".join("---" for _ in header) + " |"]
    for label, cells in _cells(report):
        row = [label] + [f"{cells[m][0]} ({cells[m][1]})" if cells[m][0] != "-" else "-"
                         for m in ALL_METRICS]
        lines.append("| " + " | ".join(row) + " |")
    lines.append("")
    if report.tests:
        any_test = next(iter(report.tests.values()))
        lines.append(f"records: {report.n_records}; alpha: {any_test.alpha}; "
                     f"* = significant after Bonferroni (family {any_test.family_size})")
    else:
        lines.append(f"records: {report.n_records}; no paired tests run")
    versions = "; ".join(f"{k}={v}" for k, v in sorted(report.resource_versions.items()))
    lines.append(f"resources: {versions}")
    if report.provider_id:
        lines.append(f"embedder: {report.provider_id} (layer {report.embed_layer})")
    if report.test_notes:
        notes = "; ".join(f"{m}: {note}" for m, note in sorted(report.test_notes.items()))
        lines.append(f"untested: {notes}")
    if report.bs_failures:
        lines.append(f"embedding failures: {len(report.bs_failures)} record(s)")
    return ("\n".join(lines) + "\n").encode("utf-8")


def _emit_csv(report: ComparisonReport) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["system", "metric", "mean", "sd", "p_raw", "p_adjusted", "significant"])
    for label, cells in _cells(report):
        for name in ALL_METRICS:
            mean_text, sd_text = cells[name]
            if mean_text == "-":
                continue
            test = report.tests.get(name) if label != "original" else None
            writer.writerow([
                label, name, mean_text.rstrip("*"), sd_text,
                f"{test.p_raw:.3e}" if test else "",
                f"{test.p_adjusted:.3e}" if test else "",
                ("yes" if test.significant else "no") if test else "",
            ])
    return buf.getvalue().encode("utf-8")


def _emit_json(report: ComparisonReport) -> bytes:
    def summary_map(mapping):
        return {m: {"mean": s.mean, "sd": s.sd} for m, s in sorted(mapping.items())}

    payload = {
        "system_id": report.system_id,
        "n_records": report.n_records,
        "system": summary_map(report.system),
        "original": summary_map(report.original),
        "tests": {
            m: {"t_stat": t.t_stat, "df": t.df, "p_raw": t.p_raw,
                "p_adjusted": t.p_adjusted, "significant": t.significant,
                "family_size": t.family_size, "alpha": t.alpha}
            for m, t in sorted(report.tests.items())
        },
        "test_notes": dict(sorted(report.test_notes.items())),
        "resource_versions": dict(sorted(report.resource_versions.items())),
        "provider_id": report.provider_id,
        "embed_layer": report.embed_layer,
        "bs_failures": dict(sorted(report.bs_failures.items())),
    }
    return (json.dumps(payload, sort_keys=True, indent=2) + "\n").encode("utf-8")
