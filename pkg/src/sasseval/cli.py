"""Command-line surface: stats, histogram, render, evaluate, simplify, annotate-summary.

Runs are deterministic by default: no seeds, no sampling, stable output
bytes for identical inputs. Endpoint credentials are read from the
``SASSEVAL_API_KEY`` environment variable, never from flags.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

from . import corpus, lexicon, pipeline, semantic
from .errors import MalformedRecord, MissingResource, SassevalError

API_KEY_ENV = "SASSEVAL_API_KEY"

_TABLE1_DECIMALS = {"voa": 2, "bs": 2}


def _resources(args) -> lexicon.Resources:
    voa = lexicon.load_voa(args.voa) if args.voa else lexicon.bundled_voa()
    freq = (lexicon.load_frequency_table(args.freq_table)
            if args.freq_table else lexicon.bundled_frequency_table())
    return lexicon.Resources(voa=voa, freq_table=freq)


def _select_split(records, split):
    if split == "all":
        return records
    return [r for r in records if r.split == split]


def _load_outputs(path: str | Path) -> dict[str, str]:
    """JSONL of {"id": ..., "text": ...} (or {"id": ..., "simplified": ...})."""
    p = Path(path)
    if not p.exists():
        raise MissingResource(f"outputs file not found: {p}")
    outputs: dict[str, str] = {}
    with p.open("r", encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise MalformedRecord(line_no, "json", str(exc)) from exc
            if not isinstance(obj, dict) or "id" not in obj:
                raise MalformedRecord(line_no, "id", "missing")
            text = obj.get("text", obj.get("simplified"))
            if not isinstance(text, str):
                raise MalformedRecord(line_no, "text", "missing or not a string")
            outputs[obj["id"]] = text
    return outputs


def _write(data: bytes, out: str | None) -> None:
    if out:
        Path(out).write_bytes(data)
    else:
        sys.stdout.write(data.decode("utf-8"))


def _fmt_stat(name: str, value: float) -> str:
    return f"{value:.{_TABLE1_DECIMALS.get(name, 1)}f}"


def cmd_stats(args) -> int:
    records = _select_split(corpus.load_corpus(args.corpus), args.split)
    result = corpus.corpus_stats(records, _resources(args), alpha=args.alpha)
    if args.format == "json":
        payload = {
            "n_records": result.n_records,
            "abstract": {m: {"mean": s.mean, "sd": s.sd} for m, s in result.abstract.items()},
            "significance": {m: {"mean": s.mean, "sd": s.sd}
                             for m, s in result.significance.items()},
            "tests": {m: {"t_stat": t.t_stat, "df": t.df, "p_raw": t.p_raw,
                          "p_adjusted": t.p_adjusted, "significant": t.significant}
                      for m, t in result.tests.items()},
            "resource_versions": dict(result.resource_versions),
        }
        _write((json.dumps(payload, sort_keys=True, indent=2) + "\n").encode(), args.out)
        return 0
    header = ["category"] + [corpus.METRIC_LABELS[m] for m in corpus.METRICS]
    rows = []
    for label, summaries, starred in (("abstract", result.abstract, False),
                                      ("significance", result.significance, True)):
        cells = [label]
        for m in corpus.METRICS:
            s = summaries[m]
            star = "*" if starred and result.tests[m].significant else ""
            cells.append(f"{_fmt_stat(m, s.mean)}{star} ({_fmt_stat(m, s.sd)})")
        rows.append(cells)
    if args.format == "csv":
        lines = [",".join(header)] + [",".join(r) for r in rows]
    else:
        lines = ["| " + " | ".join(header) + " |",
                 "| " + " | ".join("---" for _ in header) + " |"]
        lines += ["| " + " | ".join(r) + " |" for r in rows]
    versions = "; ".join(f"{k}={v}" for k, v in sorted(result.resource_versions.items()))
    lines += ["", f"records: {result.n_records}; * = significant after Bonferroni "
                  f"(family {len(corpus.METRICS)}) at alpha {args.alpha}",
              f"resources: {versions}"]
    _write(("\n".join(lines) + "\n").encode(), args.out)
    return 0


def cmd_histogram(args) -> int:
    records = _select_split(corpus.load_corpus(args.corpus), args.split)
    bins = corpus.discipline_histogram(records, min_count=args.min_count)
    if args.format == "json":
        payload = [{"discipline": d, "count": c, "log10_count": math.log10(c)}
                   for d, c in bins]
        _write((json.dumps(payload, indent=2) + "\n").encode(), args.out)
        return 0
    if args.format == "csv":
        import csv as csv_mod
        import io
        buf = io.StringIO()
        writer = csv_mod.writer(buf, lineterminator="\n")
        writer.writerow(["discipline", "count"])
        writer.writerows(bins)
        _write(buf.getvalue().encode(), args.out)
        return 0
    lines = []
    for d, c in bins:
        bar = "#" * max(1, round(10 * math.log10(c)))
        lines.append(f"{d:<50} {c:>6}  {bar}")
    _write(("\n".join(lines) + "\n").encode(), args.out)
    return 0


def cmd_render(args) -> int:
    records = _select_split(corpus.load_corpus(args.corpus), args.split)
    if args.id:
        records = [r for r in records if r.id == args.id]
        if not records:
            raise MissingResource(f"no record with id {args.id!r}")
    lines = []
    for r in records:
        text = (corpus.render_training_example(r) if args.mode == "training"
                else corpus.render_inference_prompt(r.abstract))
        lines.append(json.dumps({"id": r.id, "text": text}, ensure_ascii=False))
    _write(("\n".join(lines) + "\n").encode(), args.out)
    return 0


def cmd_evaluate(args) -> int:
    records = _select_split(corpus.load_corpus(args.corpus), args.split)
    outputs = _load_outputs(args.outputs)
    provider = None
    if args.embed_endpoint:
        provider = semantic.HttpEmbeddingProvider(endpoint=args.embed_endpoint,
                                                  layer=args.embed_layer)
    report = pipeline.evaluate_batch(records, outputs, system_id=args.system_id,
                                     resources=_resources(args), provider=provider,
                                     alpha=args.alpha, workers=args.workers)
    _write(pipeline.emit_report(report, format=args.format), args.out)
    return 0


def cmd_simplify(args) -> int:
    records = _select_split(corpus.load_corpus(args.corpus), args.split)
    config = pipeline.EndpointConfig(url=args.endpoint, model=args.model,
                                     timeout=args.timeout,
                                     max_attempts=args.max_attempts,
                                     max_new_tokens=args.max_tokens,
                                     api_key=os.environ.get(API_KEY_ENV))
    lines = []
    for r in records:
        simplified = pipeline.request_simplification(r.abstract, config)
        lines.append(json.dumps({"id": r.id, "text": simplified}, ensure_ascii=False))
    _write(("\n".join(lines) + "\n").encode(), args.out)
    return 0


def cmd_annotate_summary(args) -> int:
    annotations = corpus.load_annotations(args.annotations)
    counts = corpus.aggregate_annotations(annotations)
    if args.format == "json":
        _write((json.dumps(counts, indent=2, sort_keys=True) + "\n").encode(), args.out)
        return 0
    header = ["dimension"] + list(corpus.GRADES) + ["total"]
    rows = []
    for dim in corpus.DIMENSIONS:
        per_grade = [counts[dim][g] for g in corpus.GRADES]
        rows.append([dim] + [str(c) for c in per_grade] + [str(sum(per_grade))])
    if args.format == "csv":
        lines = [",".join(header)] + [",".join(r) for r in rows]
    else:
        lines = ["| " + " | ".join(header) + " |",
                 "| " + " | ".join("---" for _ in header) + " |"]
        lines += ["| " + " | ".join(r) + " |" for r in rows]
    _write(("\n".join(lines) + "\n").encode(), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sasseval", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, default_split="all"):
        p.add_argument("--corpus", required=True, help="corpus JSONL path")
        p.add_argument("--split", default=default_split,
                       choices=("train", "validation", "test", "all"))
        p.add_argument("--out", default=None, help="write output here instead of stdout")

    def add_resources(p):
        p.add_argument("--voa", default=None, help="VOA lexicon path (default: bundled)")
        p.add_argument("--freq-table", default=None,
                       help="frequency table path (default: bundled)")

    p = sub.add_parser("stats", help="corpus statistics with paired tests")
    add_common(p)
    add_resources(p)
    p.add_argument("--format", default="markdown", choices=("markdown", "csv", "json"))
    p.add_argument("--alpha", type=float, default=0.05)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("histogram", help="discipline histogram")
    add_common(p)
    p.add_argument("--min-count", type=int, default=3)
    p.add_argument("--format", default="text", choices=("text", "csv", "json"))
    p.set_defaults(func=cmd_histogram)

    p = sub.add_parser("render", help="render training/inference templates")
    add_common(p)
    p.add_argument("--mode", default="training", choices=("training", "inference"))
    p.add_argument("--id", default=None, help="render only this record")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("evaluate", help="score system outputs against the test split")
    add_common(p, default_split="test")
    add_resources(p)
    p.add_argument("--outputs", required=True, help="JSONL of id -> simplified text")
    p.add_argument("--system-id", default="system")
    p.add_argument("--embed-endpoint", default=None, help="embedding service URL")
    p.add_argument("--embed-layer", type=int, default=semantic.DEFAULT_LAYER)
    p.add_argument("--format", default="markdown", choices=("markdown", "csv", "json"))
    p.add_argument("--alpha", type=float, default=0.05)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("simplify", help="query a zero-shot simplifier endpoint")
    add_common(p, default_split="test")
    p.add_argument("--endpoint", required=True, help="chat-completions URL")
    p.add_argument("--model", default="")
    p.add_argument("--timeout", type=float, default=60.0)
    p.add_argument("--max-attempts", type=int, default=3)
    p.add_argument("--max-tokens", type=int, default=None)
    p.set_defaults(func=cmd_simplify)

    p = sub.add_parser("annotate-summary", help="aggregate qualitative annotations")
    p.add_argument("--annotations", required=True, help="annotation CSV path")
    p.add_argument("--format", default="markdown", choices=("markdown", "csv", "json"))
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_annotate_summary)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SassevalError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
