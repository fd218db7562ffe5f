from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from onebridge.braids import AllowableTuple, Braid, Slope, all_braids
from onebridge.classify import (
    CASES,
    Degenerate,
    case_witness,
    fillings_of,
    filling_slopes,
    knots_for_slope,
    terminal_positions,
    tuple_to_braid,
)


def scratch_slopes(w, b, t):
    """Slopes of K(w, b, t) by enumerating tuples with hand-built residue sets."""
    found = set()
    for p in range(2, w + 2):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            for x in {1, q, p - q, p - 1}:
                n = next(r for r in range(p) if (q * r - x) % p == 0)
                s_x = [(i * q) % p for i in range(1, n + 1)]
                phi_xq = sum(0 < z < q for z in s_x)
                phi_xx = sum(0 < z < x for z in s_x)
                for k in range(0, w // p + 1):
                    for eps in (1, -1) if k else (1,):
                        if (k * p + n, k * (x + eps) + phi_xx, k * q + phi_xq) == (w, b, t):
                            found.add(Slope(p, q))
    return sorted(found)


@pytest.mark.parametrize(
    "tup,expected",
    [
        ((3, 2, 2, 2, -1), (7, 2, 4)),
        ((5, 3, 1, 1, 1), (7, 2, 4)),
        ((8, 5, 0, 3, 1), (7, 2, 4)),
    ],
)
def test_tuple_to_braid_examples(tup, expected):
    assert tuple_to_braid(AllowableTuple(*tup)) == Braid(*expected)


def test_tuple_to_braid_degenerate_reports():
    out = tuple_to_braid(AllowableTuple(2, 1, 1, 1, 1))
    assert isinstance(out, Degenerate)
    assert (out.w, out.b, out.t) == (3, 2, 1)
    assert "b <= w-2" in out.reason
    assert isinstance(tuple_to_braid(AllowableTuple(3, 2, 0, 2, 1)), Degenerate)


@pytest.mark.parametrize(
    "triple,slopes",
    [
        ((7, 2, 4), ["3/2", "5/3", "8/5"]),
        ((8, 3, 6), []),
        ((6, 2, 3), ["5/3", "7/4"]),
        ((9, 4, 2), ["4/1"]),
        ((4, 2, 1), ["3/1", "5/2"]),
    ],
)
def test_fillings_examples(triple, slopes):
    assert [str(s) for s in filling_slopes(Braid(*triple))] == slopes


def test_fillings_merge_cases_per_slope():
    fills = {str(f.slope): f for f in fillings_of(Braid(4, 2, 1))}
    assert fills["3/1"].cases == (1, 2)
    assert fills["5/2"].cases == (3,)


def test_witness_tuples_regenerate_the_braid():
    for braid in all_braids(25):
        for f in fillings_of(braid):
            for wit in f.witnesses:
                assert tuple_to_braid(wit.tuple) == braid
                assert wit.slope == f.slope == wit.tuple.slope
                expected_x = {1: 1, 2: wit.slope.q, 3: wit.slope.p - wit.slope.q, 4: wit.slope.p - 1}
                assert wit.tuple.x == expected_x[wit.case_id]
                assert wit.eps == wit.tuple.eps


def test_case_one_and_four_epsilon_fixed():
    for braid in all_braids(30):
        for case_id, eps in ((1, 1), (4, -1)):
            wit = case_witness(braid, case_id)
            if wit is not None:
                assert wit.eps == eps


def test_fillings_match_scratch_enumeration():
    for braid in all_braids(14):
        assert filling_slopes(braid) == scratch_slopes(*braid.astuple()), braid


def test_modular_cases_have_unique_solution_in_z_w():
    # cases 1 and 4: the defining equation has at most one solution 0 < q < p < w
    for w in range(3, 41):
        for t in range(1, w):
            sol1 = [(p, q) for p in range(1, w) for q in range(1, p) if q * w - p * t == 1]
            sol4 = [(p, q) for p in range(1, w) for q in range(1, p) if p * (t + 1) - q * w == 1]
            assert len(sol1) <= 1 and len(sol4) <= 1
            for b in range(1, w - 1):
                braid = Braid(w, b, t)
                for case_id, sols in ((1, sol1), (4, sol4)):
                    wit = case_witness(braid, case_id)
                    if wit is not None:
                        assert [(wit.slope.p, wit.slope.q)] == sols


def test_round_trip_forward_direction():
    for p in range(2, 31):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            for x in terminal_positions(p, q):
                for k in range(5):
                    for eps in (1, -1) if k else (1,):
                        braid = tuple_to_braid(AllowableTuple(p, q, k, x, eps))
                        if isinstance(braid, Braid):
                            assert Slope(p, q) in filling_slopes(braid)


@settings(max_examples=300)
@given(st.integers(3, 400).flatmap(lambda w: st.tuples(st.just(w), st.integers(1, w - 2), st.integers(1, w - 1))))
def test_slope_bound(triple):
    w, b, t = triple
    for s in filling_slopes(Braid(w, b, t)):
        assert w + 1 >= s.p > s.q > 0
        assert s.p >= 3


def test_each_case_at_most_one_slope():
    for braid in all_braids(40):
        fills = fillings_of(braid)
        tags = [wit.case_id for f in fills for wit in f.witnesses]
        assert len(tags) == len(set(tags))
        assert set(tags) <= set(CASES)


class TestKnotsForSlope:
    def test_three_over_one(self):
        braids = [b for b, _ in knots_for_slope(Slope(3, 1), 8)]
        assert Braid(5, 2, 1) in braids and Braid(8, 3, 2) in braids

    def test_three_over_two(self):
        braids = [b for b, _ in knots_for_slope(Slope(3, 2), 7)]
        for triple in ((4, 1, 2), (5, 2, 3), (7, 2, 4)):
            assert Braid(*triple) in braids

    def test_two_over_one_is_empty(self):
        assert knots_for_slope(Slope(2, 1), 40) == []

    def test_sorted_and_tuples_generate(self):
        out = knots_for_slope(Slope(5, 2), 60)
        assert [b for b, _ in out] == sorted(b for b, _ in out)
        for braid, tup in out:
            assert tuple_to_braid(tup) == braid
            assert tup.slope == Slope(5, 2)

    def test_unbounded(self):
        assert len(knots_for_slope(Slope(3, 2), 100)) > len(knots_for_slope(Slope(3, 2), 50))

    @pytest.mark.parametrize("slope", [(3, 1), (3, 2), (5, 2), (7, 3), (11, 4)])
    def test_monotone_in_bound(self, slope):
        s = Slope(*slope)
        small = {b for b, _ in knots_for_slope(s, 20)}
        big = knots_for_slope(s, 45)
        assert small == {b for b, _ in big if b.w <= 20}

    def test_agrees_with_classifier(self):
        for slope in (Slope(3, 1), Slope(4, 3), Slope(7, 2), Slope(9, 4)):
            listed = {b for b, _ in knots_for_slope(slope, 30)}
            by_classifier = {b for b in all_braids(30) if slope in filling_slopes(b)}
            assert listed == by_classifier

    def test_rejects_small_bound(self):
        with pytest.raises(ValueError):
            knots_for_slope(Slope(3, 1), 2)
