"""Modular arithmetic over Z_p = {0, 1, ..., p-1}.

Everything here works on plain Python ints. Residues are always reduced
with the non-negative modulo, so a residue is an int in ``range(p)``.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_MODULUS = 10**6 + 1


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, u, v)`` with ``u*a + v*b == g == gcd(a, b)`` and ``g > 0``."""
    if a == 0 and b == 0:
        raise ValueError("ext_gcd(0, 0) is undefined")
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r != 0:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_u, u = u, old_u - quot * u
        old_v, v = v, old_v - quot * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def inverse_mod(a: int, m: int) -> int:
    """Inverse of ``a`` modulo ``m`` as a residue in ``range(m)``."""
    g, u, _ = ext_gcd(a, m)
    if g != 1:
        raise ValueError(f"{a} is not invertible mod {m}")
    return u % m


def _check_pair(p: int, q: int) -> None:
    if not 2 <= p <= MAX_MODULUS:
        raise ValueError(f"modulus p={p} outside 2 <= p <= {MAX_MODULUS}")
    if not 0 < q < p:
        raise ValueError(f"need 0 < q < p, got p={p}, q={q}")
    if ext_gcd(p, q)[0] != 1:
        raise ValueError(f"need gcd(p, q) = 1, got p={p}, q={q}")


def _check_residue(p: int, x: int) -> None:
    if not 0 <= x < p:
        raise ValueError(f"residue x={x} not in Z_{p}")


@dataclass(frozen=True)
class BarPair:
    """The residues ``q_bar, p_bar`` in Z_p with ``q_bar*q == p_bar*p + 1``."""

    p: int
    q: int
    q_bar: int
    p_bar: int


def bar_pair(p: int, q: int) -> BarPair:
    _check_pair(p, q)
    q_bar = inverse_mod(q, p)
    p_bar, rem = divmod(q_bar * q - 1, p)
    # q_bar in 1..p-1 keeps the quotient in Z_p; p = 2 is the only case with q_bar*q - 1 = 0.
    assert rem == 0 and 0 <= p_bar < p
    return BarPair(p, q, q_bar, p_bar)


def q_bar_x(p: int, q: int, x: int) -> int:
    """The residue ``r`` in Z_p with ``q*r = x (mod p)``."""
    _check_pair(p, q)
    _check_residue(p, x)
    return (inverse_mod(q, p) * x) % p


@dataclass(frozen=True)
class ResidueSet:
    """The ordered multiples ``[q], [2q], ..., [q_bar_x*q]`` reduced mod p."""

    p: int
    q: int
    x: int
    q_bar_x: int
    elements: tuple[int, ...]


def residue_set(p: int, q: int, x: int) -> ResidueSet:
    n = q_bar_x(p, q, x)
    elements = tuple((i * q) % p for i in range(1, n + 1))
    return ResidueSet(p, q, x, n, elements)


def phi_direct(p: int, q: int, x: int, y: int) -> int:
    """Count members of the residue set for ``x`` lying in the open interval (0, y).

    Literal enumeration. This is the reference the closed forms are
    checked against, so it must not take shortcuts.
    """
    if not 0 <= y <= p:
        raise ValueError(f"need 0 <= y <= p, got y={y}, p={p}")
    return sum(1 for z in residue_set(p, q, x).elements if 0 < z < y)


# (x, y) shapes with a closed form, keyed by a tag used in reports.
PHI_SHAPES = ("1,1", "1,q", "q,q", "p-q,p-q", "p-q,q", "p-1,p-1", "p-1,q")


def phi_shape_args(p: int, q: int, shape: str) -> tuple[int, int]:
    """Concrete ``(x, y)`` for a shape tag from :data:`PHI_SHAPES`."""
    table = {
        "1,1": (1, 1),
        "1,q": (1, q),
        "q,q": (q, q),
        "p-q,p-q": (p - q, p - q),
        "p-q,q": (p - q, q),
        "p-1,p-1": (p - 1, p - 1),
        "p-1,q": (p - 1, q),
    }
    return table[shape]


def phi_closed(p: int, q: int, x: int, y: int) -> int:
    """Closed-form count for the seven tabulated ``(x, y)`` shapes.

    When several shapes coincide (small p, or q = 1, or p = 2q - 1 and
    so on) every matching formula must agree; a disagreement would mean
    the table is wrong at that edge, so it raises instead of picking one.
    """
    bp = bar_pair(p, q)
    candidates = [
        _closed_value(bp, shape)
        for shape in PHI_SHAPES
        if phi_shape_args(p, q, shape) == (x, y)
    ]
    if not candidates:
        raise ValueError(f"no closed form for phi(x={x}, y={y}) with p={p}, q={q}")
    if len(set(candidates)) != 1:
        raise ArithmeticError(
            f"closed forms disagree at p={p}, q={q}, x={x}, y={y}: {candidates}"
        )
    return candidates[0]


def _closed_value(bp: BarPair, shape: str) -> int:
    p, q = bp.p, bp.q
    if shape in ("1,1", "q,q"):
        return 0
    if shape == "1,q":
        return bp.p_bar
    if shape == "p-q,p-q":
        return p - q - 1
    if shape == "p-q,q":
        return q - 1
    if shape == "p-1,p-1":
        return p - bp.q_bar - 1
    if shape == "p-1,q":
        return q - bp.p_bar - 1
    raise KeyError(shape)


def jump(p: int, x: int) -> int:
    """``min(x, p - x)``, the jumping-number class of the residue position x."""
    if not 0 < x < p:
        raise ValueError(f"need 0 < x < p, got x={x}, p={p}")
    return min(x, p - x)
