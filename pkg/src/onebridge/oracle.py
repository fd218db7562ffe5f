"""Independent checks on the closed-form classifier.

``build_filling_map`` enumerates every allowable tuple with a solid-torus
terminal position and records the braids they generate. ``check_equivalence``
compares that table with :func:`onebridge.classify.fillings_of` triple by
triple.

``simulate_transits`` / ``measure_w_t`` realize the arc on the cut-open
torus as a spiral with exact rational positions and read off w and t by
counting, with no modular formulas involved.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import gcd

from .braids import AllowableTuple, Braid, Slope, all_braids
from .classify import filling_slopes, terminal_positions, tuple_parameters, tuple_to_braid
from .residues import PHI_SHAPES, phi_closed, phi_direct, phi_shape_args, q_bar_x

MAX_ORACLE_W = 200


def _check_bound(max_w: int) -> None:
    if not 3 <= max_w <= MAX_ORACLE_W:
        raise ValueError(f"need 3 <= max_w <= {MAX_ORACLE_W}, got max_w={max_w}")


@dataclass
class FillingMap:
    max_w: int
    entries: dict[tuple[int, int, int], list[tuple[Slope, AllowableTuple]]] = field(
        default_factory=dict
    )

    def slopes(self, triple: tuple[int, int, int]) -> list[Slope]:
        return sorted({s for s, _ in self.entries.get(triple, [])})

    def restrict(self, max_w: int) -> FillingMap:
        kept = {k: v for k, v in self.entries.items() if k[0] <= max_w}
        return FillingMap(max_w, kept)


def build_filling_map(max_w: int) -> FillingMap:
    _check_bound(max_w)
    fmap = FillingMap(max_w)
    # w = k*p + q_bar_x with q_bar_x >= 1, so p <= max_w + 1 covers everything.
    for p in range(2, max_w + 2):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            for x in terminal_positions(p, q):
                k_max = (max_w - 1) // p + 1
                for k in range(k_max + 1):
                    if k * p + q_bar_x(p, q, x) > max_w:
                        break
                    for eps in (1, -1) if k > 0 else (1,):
                        tup = AllowableTuple(p, q, k, x, eps)
                        braid = tuple_to_braid(tup)
                        if isinstance(braid, Braid):
                            fmap.entries.setdefault(braid.astuple(), []).append(
                                (tup.slope, tup)
                            )
    for pairs in fmap.entries.values():
        pairs.sort()
    return fmap


@dataclass
class EquivalenceReport:
    max_w: int
    triples_checked: int
    mismatches: list[dict]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def check_equivalence(max_w: int) -> EquivalenceReport:
    fmap = build_filling_map(max_w)
    checked = 0
    mismatches = []
    for braid in all_braids(max_w):
        checked += 1
        closed = filling_slopes(braid)
        enumerated = fmap.slopes(braid.astuple())
        if closed != enumerated:
            mismatches.append(
                {
                    "w": braid.w,
                    "b": braid.b,
                    "t": braid.t,
                    "closed_form": [str(s) for s in closed],
                    "oracle": [str(s) for s in enumerated],
                }
            )
    return EquivalenceReport(max_w, checked, mismatches)


@dataclass(frozen=True)
class TransitPath:
    """Crossings of the arc with the meridian circle, on a circle of length p.

    Positions are exact rationals stored as integer numerators over the
    common denominator ``scale``. ``numerators[j]`` is where the arc comes
    out on the top edge after its (j+1)-th crossing; the matching bottom
    point sits one step of q to the left.
    """

    tuple: AllowableTuple
    scale: int
    numerators: tuple[int, ...]
    start_num: int
    end_num: int
    drift_num: int = 1

    @property
    def positions(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(n, self.scale) for n in self.numerators)

    @property
    def start_pos(self) -> Fraction:
        return Fraction(self.start_num, self.scale)

    @property
    def end_pos(self) -> Fraction:
        return Fraction(self.end_num, self.scale)

    @property
    def drift(self) -> Fraction:
        return Fraction(self.drift_num, self.scale)


class TransitError(RuntimeError):
    pass


def simulate_transits(tup: AllowableTuple) -> TransitPath:
    """Lay the arc out as a spiral: start at 1/2 in rectangle 0, step q + drift per crossing.

    The drift is ``1 / (2(n + 1))`` for n crossings, small enough that the
    accumulated drift never reaches the next unit interval.
    """
    p, q = tup.p, tup.q
    n = tup.k * p + q_bar_x(p, q, tup.x)
    if n == 0:
        raise TransitError(f"tuple {tup} never crosses the meridian")
    scale = 2 * (n + 1)
    start = n + 1  # 1/2
    step = q * scale + 1
    circle = p * scale
    nums = tuple((start + j * step) % circle for j in range(1, n + 1))
    if len(set(nums)) != n:
        raise TransitError(f"transit positions collide for {tup}")
    # Far endpoint: half a drift past the last crossing, still inside its rectangle.
    end = 2 * nums[-1] + 1
    return TransitPath(tup, 2 * scale, tuple(2 * v for v in nums), 2 * start, end, 2)


def end_rectangle(path: TransitPath) -> int:
    """Index of the rectangle holding the far endpoint of the arc."""
    return (path.end_num // path.scale) % path.tuple.p


def measure_w_t(path: TransitPath) -> tuple[int, int]:
    """Count crossings for w; read t off the gluing of bottom points to top points.

    Ranks are positions in increasing order around the circle starting at 0.
    Each crossing joins a bottom point (rank i) to a top point (rank i + t);
    the shift must be the same for every crossing. Since the gluing is a
    rotation, that holds whenever the points are distinct, so ties are
    rejected up front.
    """
    circle = path.tuple.p * path.scale
    shift = path.tuple.q * path.scale
    tops = path.numerators
    if len(set(t % circle for t in tops)) != len(tops):
        raise TransitError(f"coincident crossings for {path.tuple}")
    bottoms = [(s - shift) % circle for s in tops]
    w = len(tops)
    top_rank = {s: r for r, s in enumerate(sorted(tops))}
    bottom_rank = {s: r for r, s in enumerate(sorted(bottoms))}
    shifts = {(top_rank[s] - bottom_rank[b]) % w for s, b in zip(tops, bottoms)}
    if len(shifts) != 1:
        raise TransitError(f"rank shift not constant for {path.tuple}: {sorted(shifts)}")
    return w, shifts.pop()


def coprime_pairs(max_p: int, min_p: int = 2):
    for p in range(min_p, max_p + 1):
        for q in range(1, p):
            if gcd(p, q) == 1:
                yield p, q


def phi_sweep(max_p: int) -> dict:
    """Closed-form counts against literal enumeration for every coprime pair up to ``max_p``."""
    checked = 0
    mismatches = []
    for p, q in coprime_pairs(max_p):
        for shape in PHI_SHAPES:
            x, y = phi_shape_args(p, q, shape)
            checked += 1
            direct = phi_direct(p, q, x, y)
            try:
                closed = phi_closed(p, q, x, y)
            except ArithmeticError as exc:
                closed = str(exc)
            if closed != direct:
                mismatches.append({"p": p, "q": q, "shape": shape, "closed": closed, "direct": direct})
    return {"max_p": max_p, "checked": checked, "mismatches": mismatches}


def diagram_sweep(max_p: int, max_k: int) -> dict:
    """Rank-counted (w, t) against the tuple formulas, over every solid-torus tuple in range."""
    checked = 0
    mismatches = []
    for p, q in coprime_pairs(max_p):
        for x in terminal_positions(p, q):
            for k in range(max_k + 1):
                for eps in (1, -1) if k > 0 else (1,):
                    tup = AllowableTuple(p, q, k, x, eps)
                    w, _, t = tuple_parameters(tup)
                    checked += 1
                    try:
                        path = simulate_transits(tup)
                        measured = measure_w_t(path)
                        landed = end_rectangle(path)
                    except TransitError as exc:
                        mismatches.append({"tuple": str(tup), "error": str(exc)})
                        continue
                    if measured != (w, t % w) or landed != x:
                        mismatches.append(
                            {
                                "tuple": str(tup),
                                "formula": [w, t],
                                "measured": list(measured),
                                "end_rectangle": landed,
                            }
                        )
    return {"max_p": max_p, "max_k": max_k, "checked": checked, "mismatches": mismatches}
