"""Exhaustive enumeration and counting of domino, slab and mixed tilings.

Search order: pick the lex-min uncovered cell, try every placement anchored
there (slabs before dominoes, axes x < y < z), recurse.  Any placement that
covers the lex-min uncovered cell must be anchored at it, so each tiling is
reached exactly once.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from . import _kernels
from .lattice import AXES, Region, Symmetry
from .tiling import DOMINO, SLAB, Piece, Tiling, piece_cells, symbol

ORACLE_MAX_CELLS = 64


def family_shapes(family: str) -> tuple[tuple[str, int], ...]:
    if family == "slab":
        return tuple((SLAB, a) for a in AXES)
    if family == "domino":
        return tuple((DOMINO, a) for a in AXES)
    if family == "mixed":
        return ((SLAB, 2), (DOMINO, 2))
    raise ValueError(f"unknown family {family!r}")


class PlacementTable:
    """All piece placements of one family inside a region, indexed by cell number."""

    def __init__(self, region: Region, family: str, shapes=None):
        self.region = region
        self.family = family
        self.shapes = tuple(shapes) if shapes is not None else family_shapes(family)
        index = region.index
        self.pieces: list[Piece] = []
        self.cells: list[tuple[int, ...]] = []
        self.by_anchor: list[list[int]] = []
        for i, c in enumerate(region.sorted_cells):
            row = []
            for kind, axis in self.shapes:
                pc = piece_cells(kind, c, axis)
                if all(x in index for x in pc):
                    row.append(len(self.pieces))
                    self.pieces.append(Piece(kind, c, axis))
                    self.cells.append(tuple(index[x] for x in pc))
            self.by_anchor.append(row)
        self.symbols = [
            bytes(symbol(p, x) for x in piece_cells(p.kind, p.anchor, p.axis)) for p in self.pieces
        ]
        self.piece_id = {p: i for i, p in enumerate(self.pieces)}

    @property
    def n_cells(self) -> int:
        return len(self.region.cells)

    def covers(self, limit: int = -1) -> Iterator[tuple[int, ...]]:
        return _kernels.enumerate_covers(self.n_cells, self.cells, self.by_anchor, limit)

    def tiling(self, cover) -> Tiling:
        return Tiling(self.region, (self.pieces[p] for p in cover), self.family)

    def code(self, cover) -> bytes:
        out = bytearray(self.n_cells)
        for p in cover:
            for i, s in zip(self.cells[p], self.symbols[p]):
                out[i] = s
        return bytes(out)

    def codes(self, limit: int = -1) -> Iterator[bytes]:
        for cover in self.covers(limit):
            yield self.code(cover)


@lru_cache(maxsize=64)
def placement_table(region: Region, family: str) -> PlacementTable:
    return PlacementTable(region, family)


def enumerate_tilings(region: Region, family: str, limit: int | None = None) -> Iterator[Tiling]:
    """Every tiling of ``region`` by ``family``, once each, in deterministic order."""
    table = placement_table(region, family)
    for cover in table.covers(-1 if limit is None else limit):
        yield table.tiling(cover)


def enumerate_codes(region: Region, family: str, limit: int | None = None) -> Iterator[bytes]:
    return placement_table(region, family).codes(-1 if limit is None else limit)


def count(region: Region, family: str) -> int:
    """Number of tilings, without materializing them.

    The region is relabelled so its longest side is swept last, which keeps the
    occupancy window narrow.
    """
    if not region.cells:
        return 1
    dims = region.dims
    perm = sorted(AXES, key=lambda a: -dims[a])  # new axis i <- old axis perm[i]
    m = [[0] * 3 for _ in AXES]
    for new, old in enumerate(perm):
        m[new][old] = 1
    q = Symmetry(tuple(tuple(r) for r in m))
    shapes = tuple((kind, q.axis_image(axis)) for kind, axis in family_shapes(family))
    swept = Region(q.map_cell(c) for c in region.cells)
    table = PlacementTable(swept, family, shapes)
    return _kernels.count_covers(table.n_cells, table.cells, table.by_anchor)


def naive_oracle(region: Region, family: str, max_cells: int = ORACLE_MAX_CELLS) -> list[Tiling]:
    """Plain recursive enumeration over cell sets; an independent check on the fast path."""
    if len(region.cells) > max_cells:
        raise ValueError(f"oracle refuses regions above {max_cells} cells")
    shapes = family_shapes(family)
    all_cells = region.cells
    containing: dict = {c: [] for c in all_cells}
    for c in all_cells:
        for kind, axis in shapes:
            pc = frozenset(piece_cells(kind, c, axis))
            if pc <= all_cells:
                for x in pc:
                    containing[x].append((Piece(kind, c, axis), pc))
    out = []

    def rec(uncovered: frozenset, chosen: list):
        if not uncovered:
            out.append(Tiling(region, chosen, family))
            return
        pivot = min(uncovered)
        for piece, pc in containing[pivot]:
            if pc <= uncovered:
                rec(uncovered - pc, chosen + [piece])

    rec(frozenset(all_cells), [])
    return out
