"""Per-w share of knots that admit a solid-torus filling, and how many fillings they get.

    python scripts/admitting_fraction.py [--max-w 60] [--csv out.csv]
"""

import argparse
import csv
import sys
from collections import Counter, defaultdict

from onebridge.census import run_census


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-w", type=int, default=60)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--csv", help="write the table here instead of stdout")
    args = ap.parse_args()

    records, _ = run_census(args.max_w, jobs=args.jobs)
    per_w = defaultdict(Counter)
    for r in records:
        if not r.knot:
            continue
        c = per_w[r.braid.w]
        c["knots"] += 1
        c[f"fill{len(r.fillings)}"] += 1

    out = open(args.csv, "w", newline="") if args.csv else sys.stdout
    writer = csv.writer(out)
    writer.writerow(["w", "knots", "admitting", "fraction", "one", "two", "three"])
    for w in sorted(per_w):
        c = per_w[w]
        admitting = c["knots"] - c["fill0"]
        writer.writerow(
            [w, c["knots"], admitting, f"{admitting / c['knots']:.3f}", c["fill1"], c["fill2"], c["fill3"]]
        )
    if args.csv:
        out.close()


if __name__ == "__main__":
    main()
