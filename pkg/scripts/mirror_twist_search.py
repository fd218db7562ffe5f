"""For each knot, find every twist t' with K(w, w-b-1, t') carrying the mirrored slope set.

Compares the answers with the printed twist t-b-1 and with w-1-t.

    python scripts/mirror_twist_search.py [--max-w 20]
"""

import argparse

from onebridge.braids import Braid, all_braids, is_knot, mirror_slope
from onebridge.classify import filling_slopes


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-w", type=int, default=20)
    args = ap.parse_args()

    admitting = printed_ok = reflected_ok = ambiguous = 0
    for braid in all_braids(args.max_w):
        if not is_knot(braid):
            continue
        target = sorted(mirror_slope(s) for s in filling_slopes(braid))
        if not target:
            continue
        admitting += 1
        w, b2 = braid.w, braid.w - 1 - braid.b
        hits = [
            t for t in range(1, w)
            if is_knot(Braid(w, b2, t)) and filling_slopes(Braid(w, b2, t)) == target
        ]
        ambiguous += len(hits) > 1
        printed_ok += (braid.t - braid.b - 1) % w in hits
        reflected_ok += (w - 1 - braid.t) in hits
    print(f"admitting knots with w <= {args.max_w}: {admitting}")
    print(f"  partner twist matches t-b-1: {printed_ok}")
    print(f"  partner twist matches w-1-t: {reflected_ok}")
    print(f"  knots with more than one candidate partner: {ambiguous}")


if __name__ == "__main__":
    main()
