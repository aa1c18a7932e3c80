#!/usr/bin/env python3
"""Normalize a raw Special English vocabulary harvest into the resource format.

Input: a text file with one entry per line (any case; may contain multi-word
entries and '#' comments). Output: the toolkit's lexicon format - lowercase,
deduplicated, single-word entries only, sorted, with a version header.

The bundled resource (src/sasseval/resources/voa1500.txt) was produced from
an offline reconstruction of the word book's A-Z sections plus the science
and body-organ program words; regenerate from a fresh harvest with:

    python scripts/build_voa_lexicon.py harvest.txt -o voa1500.txt --version-id voa1500-v2
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("harvest", type=Path, help="raw vocabulary file, one entry per line")
    ap.add_argument("-o", "--output", type=Path, required=True)
    ap.add_argument("--version-id", default="voa1500-v1")
    ap.add_argument("--expect-count", type=int, default=None,
                    help="fail unless the final entry count matches")
    args = ap.parse_args()

    entries: set[str] = set()
    dropped_multiword = 0
    for raw in args.harvest.read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if any(ch.isspace() for ch in line):
            dropped_multiword += 1
            continue
        entries.add(line.lower())

    if args.expect_count is not None and len(entries) != args.expect_count:
        sys.exit(f"entry count {len(entries)} != expected {args.expect_count}")

    header = (f"# version: {args.version_id}\n"
              f"# {len(entries)} unique lowercase single-word entries, one per line.\n")
    args.output.write_text(header + "\n".join(sorted(entries)) + "\n", encoding="utf-8")
    print(f"wrote {args.output}: {len(entries)} entries "
          f"({dropped_multiword} multi-word entries dropped)")


if __name__ == "__main__":
    main()
