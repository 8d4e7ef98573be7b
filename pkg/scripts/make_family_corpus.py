"""Emit seeded family instances as a graph6 corpus plus a spec manifest.

The corpus file feeds `lgmult verify --g6-file`; the manifest records the
generating spec next to each line so instances stay reproducible.

    python3 scripts/make_family_corpus.py --per-case 50 --seed 0 \
        --g6-out corpus.g6 --manifest-out corpus.json
"""

import argparse
import json
import sys

from lgmult.families import negative_corpus, positive_corpus, realize
from lgmult.graphio import to_graph6


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--per-case", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--negatives", action="store_true",
                    help="emit the broken-congruence B and theta instances instead")
    ap.add_argument("--g6-out", required=True)
    ap.add_argument("--manifest-out")
    args = ap.parse_args()

    corpus = negative_corpus if args.negatives else positive_corpus
    rows = []
    lines = []
    for spec in corpus(per_case=args.per_case, seed=args.seed):
        g6 = to_graph6(realize(spec))
        lines.append(g6)
        rows.append({"graph6": g6, "spec": spec.to_json_dict()})

    with open(args.g6_out, "w", encoding="utf-8") as handle:
        handle.write("\n".join(lines))
        handle.write("\n")
    if args.manifest_out:
        with open(args.manifest_out, "w", encoding="utf-8") as handle:
            json.dump(rows, handle, indent=2)
            handle.write("\n")
    print(f"wrote {len(lines)} instances to {args.g6_out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
