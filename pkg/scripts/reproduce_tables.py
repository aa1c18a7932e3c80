#!/usr/bin/env python3
"""Reproduce the corpus-statistics and model-comparison tables from fixtures.

Given the released corpus (JSONL with id/abstract/significance/discipline/
split) and optionally one or more per-record model-output files, this prints
the corpus-statistics table for the training split and one comparison row
per system over the test split.

    python scripts/reproduce_tables.py --corpus sass.jsonl \
        --outputs gemma-7b=outputs/gemma7b.jsonl \
        --outputs gpt-4o=outputs/gpt4o.jsonl \
        --embed-endpoint http://localhost:8018

Resource overrides (--voa, --freq-table) matter for reproduction: the
bundled frequency table is an approximate offline stand-in, so published
word-accessibility values are only expected to match with a real
Wikipedia-derived table (see scripts/build_freq_table.py).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from sasseval import corpus, lexicon, pipeline, semantic  # noqa: E402


def load_outputs(path: Path) -> dict[str, str]:
    outputs = {}
    with path.open(encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                obj = json.loads(line)
                outputs[obj["id"]] = obj.get("text", obj.get("simplified"))
    return outputs


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--corpus", type=Path, required=True)
    ap.add_argument("--outputs", action="append", default=[],
                    metavar="SYSTEM=PATH", help="repeatable; one system per flag")
    ap.add_argument("--voa", type=Path, default=None)
    ap.add_argument("--freq-table", type=Path, default=None)
    ap.add_argument("--embed-endpoint", default=None)
    ap.add_argument("--embed-layer", type=int, default=semantic.DEFAULT_LAYER)
    ap.add_argument("--alpha", type=float, default=0.05)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    resources = lexicon.Resources(
        voa=lexicon.load_voa(args.voa) if args.voa else lexicon.bundled_voa(),
        freq_table=(lexicon.load_frequency_table(args.freq_table)
                    if args.freq_table else lexicon.bundled_frequency_table()),
    )
    records = corpus.load_corpus(args.corpus)
    train = [r for r in records if r.split == "train"]
    test = [r for r in records if r.split == "test"]

    print(f"# Corpus statistics (training split, n={len(train)})\n")
    stats = corpus.corpus_stats(train, resources, alpha=args.alpha)
    fmt = {"voa": 2}
    header = ["category"] + [corpus.METRIC_LABELS[m] for m in corpus.METRICS]
    print("| " + " | ".join(header) + " |")
    print("| " + " | ".join("---" for _ in header) + " |")
    for label, summaries, starred in (("abstract", stats.abstract, False),
                                      ("significance", stats.significance, True)):
        cells = [label]
        for m in corpus.METRICS:
            s = summaries[m]
            star = "*" if starred and stats.tests[m].significant else ""
            nd = fmt.get(m, 1)
            cells.append(f"{s.mean:.{nd}f}{star} ({s.sd:.{nd}f})")
        print("| " + " | ".join(cells) + " |")
    versions = "; ".join(f"{k}={v}" for k, v in sorted(stats.resource_versions.items()))
    print(f"\nresources: {versions}\n")

    if not args.outputs:
        return
    provider = None
    if args.embed_endpoint:
        provider = semantic.HttpEmbeddingProvider(endpoint=args.embed_endpoint,
                                                  layer=args.embed_layer)
    print(f"# Model comparison (test split, n={len(test)})\n")
    for spec_item in args.outputs:
        system_id, _, path = spec_item.partition("=")
        if not path:
            sys.exit(f"--outputs expects SYSTEM=PATH, got {spec_item!r}")
        report = pipeline.evaluate_batch(test, load_outputs(Path(path)), system_id,
                                         resources, provider=provider,
                                         alpha=args.alpha, workers=args.workers)
        sys.stdout.write(pipeline.emit_report(report, "markdown").decode())
        print()


if __name__ == "__main__":
    main()
