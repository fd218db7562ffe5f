"""Exit criteria for the package, one test per criterion.

Run ``pytest tests/test_acceptance.py`` to get a PASS/FAIL line for each.
"""

import time
import timeit
from importlib import resources

import pytest

from onebridge.braids import Braid, all_braids, is_knot
from onebridge.census import golden_table1, run_census, table1, verify_mirror_pairs
from onebridge.classify import filling_slopes
from onebridge.oracle import check_equivalence, diagram_sweep, phi_sweep


def best_seconds(fn, number=200):
    return min(timeit.repeat(fn, number=number, repeat=5)) / number


def timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def test_01_three_filling_knot(criterion):
    braid = Braid(7, 2, 4)
    slopes = {str(s) for s in filling_slopes(braid)}
    per_call = best_seconds(lambda: filling_slopes(braid))
    criterion("1 fillings 7 2 4 == {3/2, 5/3, 8/5}", f"{', '.join(sorted(slopes))}, {per_call * 1e6:.0f} us")
    assert slopes == {"3/2", "5/3", "8/5"}
    assert per_call < 1e-3


def test_02_empty_classification(criterion):
    braid = Braid(8, 3, 6)
    slopes = filling_slopes(braid)
    per_call = best_seconds(lambda: filling_slopes(braid))
    criterion("2 fillings 8 3 6 is empty", f"{per_call * 1e6:.0f} us")
    assert slopes == []
    assert per_call < 1e-3


def test_03_table1_golden(criterion):
    rows, elapsed = timed(lambda: [str(r) for r in table1(10)])
    rendered = ("\n".join(rows) + "\n").encode()
    golden = resources.files("onebridge").joinpath("data/table1.txt").read_bytes()
    criterion("3 Table 1 byte-exact against golden file", f"{len(rows)} rows, {elapsed:.3f}s")
    assert len(golden_table1()) == 36
    assert rendered == golden
    assert elapsed < 1.0


def test_04_census_w10(criterion):
    (_, s), elapsed = timed(lambda: run_census(10))
    counts = (s.knot_count, s.admitting_count, s.filling_count)
    criterion("4 census w <= 10 == (72, 60, 86)", f"{counts}, {elapsed:.3f}s")
    assert counts == (72, 60, 86)
    assert elapsed < 1.0


def test_05_census_w40(criterion):
    (_, s), elapsed = timed(lambda: run_census(40, jobs=1))
    counts = (s.knot_count, s.admitting_count, s.filling_count)
    criterion("5 census w <= 40 == (6000, 2380, 2692)", f"{counts}, {elapsed:.2f}s single process")
    assert counts == (6000, 2380, 2692)
    assert elapsed < 30.0


def test_06_oracle_equivalence(criterion):
    report, elapsed = timed(lambda: check_equivalence(40))
    criterion(
        "6 closed form == tuple enumeration, w <= 40",
        f"{report.triples_checked} triples, {len(report.mismatches)} mismatches, {elapsed:.2f}s",
    )
    assert report.triples_checked == 19760
    assert report.mismatches == []
    assert elapsed < 60.0


def test_07_phi_closed_forms(criterion):
    report, elapsed = timed(lambda: phi_sweep(200))
    criterion(
        "7 phi closed forms == enumeration, p <= 200",
        f"{report['checked']} cases, {len(report['mismatches'])} mismatches, {elapsed:.2f}s",
    )
    assert report["mismatches"] == []
    assert elapsed < 5.0


def test_08_diagram_oracle(criterion):
    report, elapsed = timed(lambda: diagram_sweep(30, 3))
    criterion(
        "8 spiral diagram (w, t) == tuple formulas, p <= 30, k <= 3",
        f"{report['checked']} tuples, {len(report['mismatches'])} mismatches, {elapsed:.2f}s",
    )
    assert report["mismatches"] == []
    assert elapsed < 10.0


def test_09_slope_bound(criterion):
    violations = []
    emitted = 0
    for braid in all_braids(40):
        for s in filling_slopes(braid):
            emitted += 1
            if not (braid.w + 1 >= s.p > s.q > 0 and s.p >= 3):
                violations.append((braid.astuple(), str(s)))
    criterion("9 every slope has w+1 >= p > q > 0 and p >= 3, w <= 40", f"{emitted} slopes, {len(violations)} violations")
    assert violations == []


def test_10_mirror_pairs(criterion):
    report = verify_mirror_pairs(20)
    anchors = {
        (5, 2, 1): ["3/1", "4/1"],
        (5, 2, 3): ["3/2", "4/3"],
        (4, 2, 1): ["3/1", "5/2"],
        (4, 1, 2): ["3/2", "5/3"],
    }
    got = {t: [str(s) for s in filling_slopes(Braid(*t))] for t in anchors}
    criterion(
        "10 mirror pairs carry p/q to p/(p-q), w <= 20",
        f"{report.pairs_checked} pairs, {len(report.mismatches)} mismatches; "
        f"printed (t-b-1) twist disagrees on {len(report.literal_mismatches)} of {report.literal_pairs_checked}",
    )
    assert got == anchors
    assert report.pairs_checked > 0
    assert report.mismatches == []


KNOTS = [(4, 1, 2), (4, 2, 1), (5, 2, 1), (7, 2, 4), (8, 3, 6)]
LINKS = [(4, 1, 1), (4, 1, 3), (4, 2, 2), (6, 1, 3), (10, 1, 1)]


def test_11_knot_calibration(criterion):
    wrong = [t for t in KNOTS if not is_knot(Braid(*t))] + [t for t in LINKS if is_knot(Braid(*t))]
    criterion("11 knot/link calibration on 10 triples", f"{len(wrong)} wrong")
    assert wrong == []
