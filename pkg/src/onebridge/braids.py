"""1-bridge braid parameters, braid words and closure connectivity.

A 1-bridge braid K(w, b, t) in the solid torus is the closure of
``sigma_b ... sigma_1 (sigma_{w-1} ... sigma_1)^t`` on w strands.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd

MAX_WINDING = 10**6


@dataclass(frozen=True, order=True)
class Braid:
    """Parameter triple (w, b, t) with ``1 <= b <= w-2`` and ``1 <= t <= w-1``.

    The twist is taken mod w before the range check, since twisting along
    a meridian disk changes t by multiples of w.
    """

    w: int
    b: int
    t: int

    def __post_init__(self) -> None:
        if not 3 <= self.w <= MAX_WINDING:
            raise ValueError(f"winding number needs 3 <= w <= {MAX_WINDING}, got w={self.w}")
        if not 1 <= self.b <= self.w - 2:
            raise ValueError(f"bridge width needs 1 <= b <= w-2, got b={self.b} with w={self.w}")
        t = self.t % self.w
        if t == 0:
            raise ValueError(f"twist needs 1 <= t <= w-1 (mod w), got t={self.t} with w={self.w}")
        object.__setattr__(self, "t", t)

    def astuple(self) -> tuple[int, int, int]:
        return (self.w, self.b, self.t)

    def __str__(self) -> str:
        return f"K({self.w},{self.b},{self.t})"


@dataclass(frozen=True, order=True)
class Slope:
    """A (p, q) curve on the outer torus, ``p > q > 0`` and coprime."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if not self.p > self.q > 0:
            raise ValueError(f"slope needs p > q > 0, got {self.p}/{self.q}")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"slope needs gcd(p, q) = 1, got {self.p}/{self.q}")

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"

    @classmethod
    def parse(cls, text: str) -> Slope:
        p, q = text.split("/")
        return cls(int(p), int(q))


@dataclass(frozen=True, order=True)
class AllowableTuple:
    """Integers (p, q, k, x, eps) describing an arc on the torus missing a (p, q) curve.

    k counts the full wraps, x is the rectangle holding the last arc, and
    eps records whether the first arc is a left (+1) or right (-1) arc.
    """

    p: int
    q: int
    k: int
    x: int
    eps: int

    def __post_init__(self) -> None:
        if not (self.p > self.q > 0 and gcd(self.p, self.q) == 1):
            raise ValueError(
                f"allowable tuple needs p > q > 0 and gcd(p, q) = 1, got p={self.p}, q={self.q}"
            )
        if self.k < 0:
            raise ValueError(f"allowable tuple needs k >= 0, got k={self.k}")
        if not self.p > self.x >= 0:
            raise ValueError(f"allowable tuple needs p > x >= 0, got x={self.x}, p={self.p}")
        if self.k == 0 and self.eps != 1:
            raise ValueError(f"allowable tuple needs eps = 1 when k = 0, got eps={self.eps}")
        if self.eps not in (1, -1):
            raise ValueError(f"allowable tuple needs eps in {{1, -1}}, got eps={self.eps}")

    @property
    def slope(self) -> Slope:
        return Slope(self.p, self.q)

    def __str__(self) -> str:
        return f"({self.p},{self.q},{self.k},{self.x},{self.eps:+d})"


def braid_word(braid: Braid) -> list[int]:
    """Generator indices, ``[b, ..., 1]`` followed by t copies of ``[w-1, ..., 1]``."""
    head = list(range(braid.b, 0, -1))
    twist = list(range(braid.w - 1, 0, -1))
    return head + twist * braid.t


def braid_word_json(braid: Braid) -> str:
    return json.dumps(braid_word(braid))


def closure_permutation(braid: Braid) -> tuple[int, ...]:
    """Strand permutation of the closed braid as a 1-based map.

    ``perm[i - 1]`` is the image of strand i under ``gamma_b . rho^t``, with
    rho the cyclic shift ``i -> i+1`` and gamma_b the cycle ``1 -> 2 -> ... -> b+1 -> 1``.
    """
    w, b, t = braid.w, braid.b, braid.t
    out = []
    for i in range(1, w + 1):
        j = (i - 1 + t) % w + 1
        if j <= b + 1:
            j = j % (b + 1) + 1
        out.append(j)
    return tuple(out)


def cycles(perm: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Cycle decomposition of a 1-based permutation, each cycle led by its smallest entry."""
    seen = [False] * (len(perm) + 1)
    result = []
    for start in range(1, len(perm) + 1):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = perm[i - 1]
        result.append(tuple(cyc))
    return result


def component_count(braid: Braid) -> int:
    return len(cycles(closure_permutation(braid)))


def is_knot(braid: Braid) -> bool:
    perm = closure_permutation(braid)
    i, steps = perm[0], 1
    while i != 1:
        i = perm[i - 1]
        steps += 1
    return steps == braid.w


@dataclass(frozen=True)
class MirrorOutOfRange:
    """Mirror parameters that fall outside the valid braid ranges."""

    w: int
    b: int
    t: int
    reason: str


def mirror(braid: Braid) -> Braid | MirrorOutOfRange:
    """Image under the orientation-reversing map ``(w, b, t) -> (w, w-b-1, t-b-1)``.

    The twist is reduced mod w. A zero twist is reported rather than
    renormalized, because the formula is not an involution on triples.
    """
    w = braid.w
    b = w - braid.b - 1
    t = (braid.t - braid.b - 1) % w
    if t == 0:
        return MirrorOutOfRange(w, b, t, "twist reduces to 0 mod w")
    if not 1 <= b <= w - 2:
        return MirrorOutOfRange(w, b, t, "bridge width leaves 1..w-2")
    return Braid(w, b, t)


def reflect(braid: Braid) -> Braid | MirrorOutOfRange:
    """The involution ``(w, b, t) -> (w, w-1-b, w-1-t)``.

    This is the pairing that actually carries filling slopes p/q to
    p/(p-q): in the x = q family, ``w = kp + 1`` and ``t = kq`` go to
    ``t' = k(p - q) = w - 1 - t``. Only ``t = w-1`` has no partner.
    """
    w = braid.w
    t = w - 1 - braid.t
    if t == 0:
        return MirrorOutOfRange(w, w - 1 - braid.b, t, "twist reduces to 0 mod w")
    return Braid(w, w - 1 - braid.b, t)


def mirror_slope(slope: Slope) -> Slope:
    return Slope(slope.p, slope.p - slope.q)


def is_canonical(braid: Braid) -> bool:
    """``b < w/2``, and ``t < w/2`` as well when ``b = (w-1)/2``."""
    if 2 * braid.b >= braid.w:
        return False
    if 2 * braid.b == braid.w - 1:
        return 2 * braid.t < braid.w
    return True


def all_braids(max_w: int, min_w: int = 3):
    """Every valid triple with ``min_w <= w <= max_w`` in lexicographic order."""
    for w in range(max(min_w, 3), max_w + 1):
        for b in range(1, w - 1):
            for t in range(1, w):
                yield Braid(w, b, t)
