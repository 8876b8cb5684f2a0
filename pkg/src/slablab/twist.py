"""Effects between dominoes, the twist of a domino tiling, and domino flips.

Each domino carries the unit vector pointing from its white cube to its black
cube (cell ``(x, y, z)`` is black when ``x + y + z`` is even).  A vertical
domino ``d1`` (long axis z) affects a horizontal domino ``d0`` (long axis y)
when their shadows on the plane ``x = 0`` overlap in an open set; the effect
is then ``SIGMA * (v(lo) x v(hi)) . e_x`` with ``lo``/``hi`` ordered by x.
"""

from __future__ import annotations

from bisect import bisect_right
from fractions import Fraction
from typing import Iterable

from .lattice import AXES, Cell
from .tiling import DOMINO, Piece, Tiling

# Global orientation constant of the effect.  With +1 the rigid tiling of the
# 3x3x2 box kept in the fixtures (domino_3x3x2_twist_minus1) has twist -1.
SIGMA = 1


class TwistError(ValueError):
    pass


def orientation(d: Piece) -> tuple[int, int, int]:
    """v(d): +-e_axis, from the white cube to the black cube."""
    x, y, z = d.anchor
    s = -1 if (x + y + z) % 2 == 0 else 1
    return tuple(s if a == d.axis else 0 for a in AXES)


def _cross_x(u, v) -> int:
    return u[1] * v[2] - u[2] * v[1]


def affects(d0: Piece, d1: Piece) -> bool:
    """Open shadows of ``d0`` and ``d1`` on the plane x = 0 intersect."""
    _, y0, z0 = d0.anchor
    _, y1, z1 = d1.anchor
    return y1 in (y0, y0 + 1) and z0 in (z1, z1 + 1)


def effect(d0: Piece, d1: Piece) -> int:
    if d0.kind != DOMINO or d1.kind != DOMINO or d0.axis != 1 or d1.axis != 2:
        raise TwistError("effect needs a y-domino and a z-domino")
    if not affects(d0, d1):
        return 0
    if d0.anchor[0] == d1.anchor[0]:
        raise TwistError("dominoes overlap")
    lo, hi = (d0, d1) if d0.anchor[0] < d1.anchor[0] else (d1, d0)
    return SIGMA * _cross_x(orientation(lo), orientation(hi))


def _sgn(x: int, y: int, z: int) -> int:
    return -1 if (x + y + z) % 2 == 0 else 1


def effect_sum(y_anchors: Iterable, z_anchors: Iterable) -> int:
    """Sum of effects over all (y-domino, z-domino) pairs, given anchors only.

    z-dominoes are bucketed by their (y, z) line; each bucket keeps prefix sums of
    orientation signs in x order, so each y-domino costs a few bisections.
    """
    lines: dict[tuple[int, int], list] = {}
    for x, y, z in z_anchors:
        lines.setdefault((y, z), []).append((x, _sgn(x, y, z)))
    index = {}
    for key, items in lines.items():
        items.sort()
        xs = [i[0] for i in items]
        pref = [0]
        for _, s in items:
            pref.append(pref[-1] + s)
        index[key] = (xs, pref)
    total = 0
    for x, y, z in y_anchors:
        s0 = _sgn(x, y, z)
        acc = 0
        for key in ((y, z), (y, z - 1), (y + 1, z), (y + 1, z - 1)):
            hit = index.get(key)
            if hit is None:
                continue
            xs, pref = hit
            k = bisect_right(xs, x)
            # d1 above x: d0 is lo, +s0*s1; below: -s0*s1
            acc += (pref[-1] - pref[k]) - pref[k]
        total += s0 * acc
    return SIGMA * total


def effect_sum_brute(tiling: Tiling) -> int:
    ys = [d for d in tiling.pieces if d.kind == DOMINO and d.axis == 1]
    zs = [d for d in tiling.pieces if d.kind == DOMINO and d.axis == 2]
    return sum(effect(d0, d1) for d0 in ys for d1 in zs)


def twist(t: Tiling, check_integral: bool = True) -> Fraction:
    """A quarter of the effect sum; asserted integral when the region is a z-cylinder."""
    if t.family != "domino" and any(p.kind != DOMINO for p in t.pieces):
        raise TwistError("twist is defined on domino tilings")
    ys = [p.anchor for p in t.pieces if p.axis == 1]
    zs = [p.anchor for p in t.pieces if p.axis == 2]
    tw = Fraction(effect_sum(ys, zs), 4)
    if check_integral and tw.denominator != 1 and t.region.is_cylinder_along(2):
        raise TwistError(f"non-integral twist {tw} on a cylinder")
    return tw


def domino_flip_moves(t: Tiling) -> list[tuple[tuple[Piece, Piece], Tiling]]:
    """Every pair of parallel dominoes filling a 2x2x1 box, with the tiling obtained
    by turning the pair a quarter turn inside the box."""
    pieces = t.pieces
    moves = []
    for d in sorted(pieces):
        if d.kind != DOMINO:
            continue
        for b in AXES:
            if b == d.axis:
                continue
            partner = Piece(DOMINO, d.anchor.shifted(b), d.axis)
            if partner in pieces:
                new = (Piece(DOMINO, d.anchor, b), Piece(DOMINO, d.anchor.shifted(d.axis), b))
                moves.append(((d, partner), t.with_pieces((d, partner), new)))
    return moves


def cell_sign(cell: Cell) -> int:
    return _sgn(*cell)
