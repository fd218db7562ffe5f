"""Recompute the census counts, Table 1 and the three-filling search.

    python scripts/reproduce_census.py [--max-w 40] [--jobs 4]
"""

import argparse
import time

from onebridge.census import golden_table1, run_census, table1

PUBLISHED = {10: (72, 60, 86), 40: (6000, 2380, 2692)}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-w", type=int, default=40)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    for bound in sorted({10, args.max_w}):
        start = time.perf_counter()
        records, s = run_census(bound, jobs=args.jobs)
        counts = (s.knot_count, s.admitting_count, s.filling_count)
        tag = ""
        if bound in PUBLISHED:
            tag = "  matches published" if counts == PUBLISHED[bound] else f"  PUBLISHED {PUBLISHED[bound]}"
        print(
            f"w <= {bound}: {s.triple_count} triples, knots {counts[0]}, admitting {counts[1]}, "
            f"fillings {counts[2]} ({time.perf_counter() - start:.2f}s){tag}"
        )
        print(
            f"  canonical: knots {s.canonical_knot_count}, admitting {s.canonical_admitting_count}, "
            f"fillings {s.canonical_filling_count}"
        )
        three = [r.braid for r in records if r.knot and r.canonical and len(r.fillings) == 3]
        print(f"  canonical knots with three fillings: {', '.join(map(str, three)) or 'none'}")

    rows = [str(r) for r in table1(10)]
    print(f"\nTable 1 ({len(rows)} rows, {'identical to' if rows == golden_table1() else 'DIFFERS from'} golden copy)")
    for row in rows:
        print(" ", row)


if __name__ == "__main__":
    main()
