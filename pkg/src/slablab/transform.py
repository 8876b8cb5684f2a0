"""Deletion of bad cubes and inflation of good ones: slab and mixed tilings of a
region become domino tilings of a new region, whose twists give the mixed twist
and the triple twist.

A good cell with in-plane coordinates ``(b, c)`` (cyclic order for the view
axis) and height ``h`` goes to ``(u, w, h)`` with ``u = (b + c - p) / 2`` and
``w = (c - b + p) / 2``, then relabelled as ``(x, y, z)``.  This is the
45-degree diamond inflation made integral; it preserves orientation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .lattice import AXES, CANONICAL_PAIRS, VIEW_PLANE, Cell, GoodPair, Region, is_good
from .tiling import DOMINO, SLAB, Piece, Tiling
from .twist import TwistError, effect_sum, twist


class TransformError(ValueError):
    pass


def transform_cell(cell, pair: GoodPair) -> Cell:
    p, q = VIEW_PLANE[pair.axis]
    b, c, h = cell[p], cell[q], cell[pair.axis]
    s = b + c - pair.parity
    if s % 2:
        raise TransformError(f"{tuple(cell)} is not good for {pair}")
    return Cell(s // 2, (c - b + pair.parity) // 2, h)


def transform_region(region: Region, pair: GoodPair) -> tuple[Region, dict[Cell, Cell]]:
    cmap = {c: transform_cell(c, pair) for c in region.sorted_cells if is_good(c, pair)}
    return Region(cmap.values()), cmap


@dataclass(frozen=True)
class TransformResult:
    pair: GoodPair
    region: Region
    tiling: Tiling
    cell_map: dict

    def twist(self) -> Fraction:
        return twist(self.tiling)

    def cell_map_json(self) -> list:
        return [[list(k), list(v)] for k, v in sorted(self.cell_map.items())]


def _domino_from(a: Cell, b: Cell) -> Piece:
    diff = [b[i] - a[i] for i in AXES]
    if sorted(map(abs, diff)) != [0, 0, 1]:
        raise TransformError(f"images {a} and {b} are not adjacent")
    axis = next(i for i in AXES if diff[i])
    return Piece(DOMINO, min(a, b), axis)


def transform_pieces(pieces, pair: GoodPair):
    """Images of pieces as dominoes; z-dominoes of bad cells vanish."""
    for piece in pieces:
        good = [c for c in piece.cells if is_good(c, pair)]
        if piece.kind == SLAB:
            if len(good) != 2:
                raise TransformError(f"{piece} does not cover two good cells")
        elif len(good) == 1:
            raise TransformError(f"{piece} splits a good/bad pair")
        elif not good:
            continue
        yield _domino_from(transform_cell(good[0], pair), transform_cell(good[1], pair))


def transform_tiling(t: Tiling, pair: GoodPair) -> TransformResult:
    if t.family == "mixed" and pair.axis != 2:
        raise TransformError("mixed tilings are transformed along the z view only")
    if t.family == "domino":
        raise TransformError("expected a slab or mixed tiling")
    region, cmap = transform_region(t.region, pair)
    return TransformResult(pair, region, Tiling(region, transform_pieces(t.pieces, pair), "domino"), cmap)


def _twist_value(t: Tiling, pair: GoodPair) -> Fraction:
    ys, zs = [], []
    for d in transform_pieces(t.pieces, pair):
        if d.axis == 1:
            ys.append(d.anchor)
        elif d.axis == 2:
            zs.append(d.anchor)
    return Fraction(effect_sum(ys, zs), 4)


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise TwistError(f"{what} is not an integer: {value}")
    return int(value)


def mixed_twist(t: Tiling, pair: GoodPair = CANONICAL_PAIRS[2]) -> int:
    if pair.axis != 2:
        raise TransformError("the mixed twist uses a z-view pair")
    if not t.region.is_cylinder_along(2):
        raise TransformError("mixed twist needs a z-cylinder")
    return _as_int(_twist_value(t, pair), "mixed twist")


def pair_twist(t: Tiling, pair: GoodPair) -> Fraction:
    """Twist of the transformed tiling, as an exact rational (any region)."""
    return _twist_value(t, pair)


class TripleTwist(NamedTuple):
    x: int
    y: int
    z: int


def triple_twist(t: Tiling, pairs=None) -> TripleTwist:
    """``(Tw_x, Tw_y, Tw_z)``; ``pairs`` maps axis -> GoodPair (canonical by default)."""
    if t.family != "slab":
        raise TransformError("triple twist is defined on slab tilings")
    if not t.region.is_box():
        raise TransformError("triple twist is defined on boxes")
    pairs = {**CANONICAL_PAIRS, **(pairs or {})}
    return TripleTwist(*(_as_int(_twist_value(t, pairs[a]), f"Tw along {'xyz'[a]}") for a in AXES))


class TwistTable:
    """Pairwise effects between the transformed images of every placement of a
    region, so the twist of any tiling is a sum over pairs of its pieces.

    This is a second route to the twist; tests compare it with
    ``transform_tiling`` + ``twist`` tiling by tiling.
    """

    def __init__(self, table, pair: GoodPair | None = None):
        import numpy as np

        if table.family == "mixed" and (pair is None or pair.axis != 2):
            raise TransformError("mixed tilings are transformed along the z view only")
        if table.family == "slab" and pair is None:
            raise TransformError("slab tilings need a good pair")
        self.pair = pair
        n = len(table.pieces)
        ys, zs = [], []
        for pid, piece in enumerate(table.pieces):
            if table.family == "domino":
                d = piece  # domino tilings are their own image
            else:
                images = list(transform_pieces([piece], pair))
                if not images:
                    continue
                d = images[0]
            if d.axis == 1:
                ys.append((pid, d.anchor))
            elif d.axis == 2:
                zs.append((pid, d.anchor))
        m = np.zeros((n, n), dtype=np.int64)
        for a, ya in ys:
            for b, zb in zs:
                m[a, b] = effect_sum([ya], [zb])
        self.matrix = m

    def effect_sum(self, cover) -> int:
        idx = list(cover)
        return int(self.matrix[idx][:, idx].sum())

    def twist(self, cover) -> Fraction:
        return Fraction(self.effect_sum(cover), 4)

    def effect_sums(self, covers):
        """Vectorized effect sums for many covers (one row per cover)."""
        import numpy as np

        covers = list(covers)
        x = np.zeros((len(covers), self.matrix.shape[0]), dtype=np.int64)
        for r, cover in enumerate(covers):
            x[r, list(cover)] = 1
        return ((x @ self.matrix) * x).sum(axis=1)
