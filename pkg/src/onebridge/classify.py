"""Which Dehn fillings on the outer torus of a 1-bridge braid exterior give a solid torus.

Two directions are provided. :func:`tuple_to_braid` sends an allowable
5-tuple to the braid it describes. :func:`fillings_of` goes the other way
and solves for every slope of a given braid in closed form, one solver
per terminal position ``x in {1, q, p-q, p-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .braids import AllowableTuple, Braid, Slope
from .residues import bar_pair, ext_gcd, inverse_mod, phi_direct, q_bar_x

CASES = (1, 2, 3, 4)


@dataclass(frozen=True)
class Degenerate:
    """Parameters produced by a tuple that are not a valid 1-bridge braid."""

    w: int
    b: int
    t: int
    reason: str

    def __str__(self) -> str:
        return f"degenerate (w={self.w}, b={self.b}, t={self.t}): {self.reason}"


def tuple_parameters(tup: AllowableTuple) -> tuple[int, int, int]:
    """Raw ``(w, b, t)`` of a tuple, before any range check."""
    p, q, k, x, eps = tup.p, tup.q, tup.k, tup.x, tup.eps
    w = k * p + q_bar_x(p, q, x)
    t = k * q + phi_direct(p, q, x, q)
    b = k * (x + eps) + phi_direct(p, q, x, x)
    return w, b, t


def tuple_to_braid(tup: AllowableTuple) -> Braid | Degenerate:
    w, b, t = tuple_parameters(tup)
    if w < 3:
        return Degenerate(w, b, t, "needs w >= 3")
    if not 1 <= b <= w - 2:
        return Degenerate(w, b, t, "needs 1 <= b <= w-2")
    if not 1 <= t <= w - 1:
        return Degenerate(w, b, t, "needs 1 <= t <= w-1")
    return Braid(w, b, t)


def terminal_positions(p: int, q: int) -> list[int]:
    """The distinct values among ``1, q, p-q, p-1``, in that order."""
    out: list[int] = []
    for x in (1, q, p - q, p - 1):
        if x not in out:
            out.append(x)
    return out


@dataclass(frozen=True)
class FillingWitness:
    """One certificate that ``slope`` fills to a solid torus.

    ``case_id`` names the terminal position of the generating tuple:
    1 for x = 1, 2 for x = q, 3 for x = p-q, 4 for x = p-1.
    """

    slope: Slope
    case_id: int
    eps: int
    tuple: AllowableTuple


@dataclass(frozen=True)
class Filling:
    slope: Slope
    witnesses: tuple[FillingWitness, ...]

    @property
    def cases(self) -> tuple[int, ...]:
        return tuple(sorted({wit.case_id for wit in self.witnesses}))


def _case1(w: int, b: int, t: int) -> FillingWitness | None:
    # q*w - p*t = 1 with 0 < q < p < w  =>  p = -t^{-1} mod w.
    if ext_gcd(t, w)[0] != 1:
        return None
    p = (-inverse_mod(t, w)) % w
    if p == 0:
        return None
    q, rem = divmod(1 + p * t, w)
    if rem or not 0 < q < p or q * w - p * t != 1:
        return None
    k = w // p
    if b != 2 * k:
        return None
    tup = AllowableTuple(p, q, k, 1, 1)
    return FillingWitness(Slope(p, q), 1, 1, tup)


def _case2(w: int, b: int, t: int) -> FillingWitness | None:
    k = gcd(w - 1, t)
    p, q = (w - 1) // k, t // k
    if not 0 < q < p:
        return None
    for eps in (1, -1):
        if b == k * (q + eps):
            return FillingWitness(Slope(p, q), 2, eps, AllowableTuple(p, q, k, q, eps))
    return None


def _case3(w: int, b: int, t: int) -> FillingWitness | None:
    g = gcd(w + 1, t + 1)
    k = g - 1
    p, q = (w + 1) // g, (t + 1) // g
    if not 0 < q < p:
        return None
    for eps in ((1, -1) if k > 0 else (1,)):
        if b == k * (p - q + eps) + (p - q - 1):
            return FillingWitness(Slope(p, q), 3, eps, AllowableTuple(p, q, k, p - q, eps))
    return None


def _case4(w: int, b: int, t: int) -> FillingWitness | None:
    # p*(t+1) - q*w = 1 with 0 < q < p < w  =>  p = (t+1)^{-1} mod w.
    if ext_gcd(t + 1, w)[0] != 1:
        return None
    p = inverse_mod(t + 1, w)
    q, rem = divmod(p * (t + 1) - 1, w)
    if rem or not 0 < q < p or p * (t + 1) - q * w != 1:
        return None
    k = w // p
    if k == 0 or b != k * (p - 2) + (p - bar_pair(p, q).q_bar - 1):
        return None
    tup = AllowableTuple(p, q, k, p - 1, -1)
    return FillingWitness(Slope(p, q), 4, -1, tup)


_SOLVERS = {1: _case1, 2: _case2, 3: _case3, 4: _case4}


def case_witness(braid: Braid, case_id: int) -> FillingWitness | None:
    """The single slope, if any, produced by one of the four conditions."""
    return _SOLVERS[case_id](braid.w, braid.b, braid.t)


def fillings_of(braid: Braid) -> list[Filling]:
    """All solid-torus filling slopes of ``braid``, sorted by slope.

    Works for any valid triple; whether the closure is a knot is the
    caller's concern.
    """
    by_slope: dict[Slope, list[FillingWitness]] = {}
    for case_id in CASES:
        wit = case_witness(braid, case_id)
        if wit is not None:
            by_slope.setdefault(wit.slope, []).append(wit)
    return [Filling(s, tuple(ws)) for s, ws in sorted(by_slope.items())]


def filling_slopes(braid: Braid) -> list[Slope]:
    return [f.slope for f in fillings_of(braid)]


def knots_for_slope(slope: Slope, max_w: int) -> list[tuple[Braid, AllowableTuple]]:
    """Braids with ``w <= max_w`` for which ``slope`` fills to a solid torus.

    Enumerates the generating tuples directly. Each braid is listed once,
    with the first tuple found for it.
    """
    if max_w < 3:
        raise ValueError(f"need max_w >= 3, got {max_w}")
    p, q = slope.p, slope.q
    found: dict[Braid, AllowableTuple] = {}
    for x in terminal_positions(p, q):
        base = q_bar_x(p, q, x)
        k = 0
        while k * p + base <= max_w:
            for eps in (1, -1) if k > 0 else (1,):
                tup = AllowableTuple(p, q, k, x, eps)
                braid = tuple_to_braid(tup)
                if isinstance(braid, Braid):
                    found.setdefault(braid, tup)
            k += 1
    return sorted(found.items())
