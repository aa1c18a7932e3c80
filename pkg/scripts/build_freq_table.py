#!/usr/bin/env python3
"""Build the word-frequency table resource from a raw corpus word count.

Input: a two-column file of ``word<TAB>count`` (or ``count word`` with
--count-first) as produced by counting word tokens over an English
Wikipedia dump, e.g.:

    wikiextractor dump.xml.bz2 -o - | tr -sc 'A-Za-z' '\\n' \\
        | tr 'A-Z' 'a-z' | sort | uniq -c | sort -rn > counts.txt

Output: the toolkit's TSV format (word<TAB>frequency per 10^9 tokens,
lowercase keys, '#' comment header with a version string). Counts are
scaled so the column sums to 10^9 over the *full* input before any
--min-freq filtering, so retained frequencies stay absolute.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path


def parse_counts(path: Path, count_first: bool) -> dict[str, int]:
    counts: dict[str, int] = {}
    with path.open("r", encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            parts = raw.split()
            if not parts:
                continue
            if len(parts) != 2:
                print(f"skipping line {line_no}: expected 2 fields", file=sys.stderr)
                continue
            a, b = parts
            word, count = (b, a) if count_first else (a, b)
            word = word.lower()
            if not word.isalpha():
                continue
            try:
                n = int(count)
            except ValueError:
                print(f"skipping line {line_no}: bad count {count!r}", file=sys.stderr)
                continue
            if n > 0:
                counts[word] = counts.get(word, 0) + n
    return counts


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("counts", type=Path, help="raw word-count file")
    ap.add_argument("-o", "--output", type=Path, required=True)
    ap.add_argument("--version-id", default="wiki-freq-v1",
                    help="version string embedded in the resource header")
    ap.add_argument("--count-first", action="store_true",
                    help="input lines are 'count word' (uniq -c style)")
    ap.add_argument("--min-freq", type=float, default=0.01,
                    help="drop words below this frequency per 10^9 tokens")
    args = ap.parse_args()

    counts = parse_counts(args.counts, args.count_first)
    if not counts:
        sys.exit("no usable counts in input")
    total = sum(counts.values())
    scale = 1e9 / total

    lines = [f"# version: {args.version_id}",
             f"# word<TAB>frequency per 10^9 tokens; built from {total} tokens."]
    kept = 0
    for word in sorted(counts):
        freq = counts[word] * scale
        if freq < args.min_freq:
            continue
        lines.append(f"{word}\t{freq:.6g}")
        kept += 1
    args.output.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {args.output}: {kept} words from {total} tokens")


if __name__ == "__main__":
    main()
