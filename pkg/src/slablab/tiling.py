"""Pieces, tilings, validation, the canonical byte code and the JSON tiling format."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple

from .lattice import AXES, AXIS_NAMES, Cell, Region, Symmetry, color_of, parse_axis, region_from_json

DOMINO = "domino"
SLAB = "slab"
FAMILIES = ("domino", "slab", "mixed")


class Piece(NamedTuple):
    """A domino (``axis`` = long axis) or slab (``axis`` = normal axis) named by
    its lex-min cell."""

    kind: str
    anchor: Cell
    axis: int

    @classmethod
    def domino(cls, anchor, axis) -> "Piece":
        return cls(DOMINO, Cell(*anchor), parse_axis(axis))

    @classmethod
    def slab(cls, anchor, normal) -> "Piece":
        return cls(SLAB, Cell(*anchor), parse_axis(normal))

    @property
    def cells(self) -> tuple[Cell, ...]:
        return piece_cells(self.kind, self.anchor, self.axis)

    @property
    def is_horizontal(self) -> bool:
        """Contained in one z-floor."""
        return self.axis == 2 if self.kind == SLAB else self.axis != 2

    def to_json(self) -> dict:
        key = "normal" if self.kind == SLAB else "axis"
        return {"kind": self.kind, "anchor": list(self.anchor), key: AXIS_NAMES[self.axis]}

    @classmethod
    def from_json(cls, data: dict) -> "Piece":
        kind = data.get("kind")
        if kind == SLAB:
            allowed, key = {"kind", "anchor", "normal"}, "normal"
        elif kind == DOMINO:
            allowed, key = {"kind", "anchor", "axis"}, "axis"
        else:
            raise ValueError(f"unknown piece kind {kind!r}")
        if set(data) != allowed:
            raise ValueError(f"{kind} piece needs exactly keys {sorted(allowed)}")
        return cls(kind, Cell(*(int(v) for v in data["anchor"])), parse_axis(data[key]))


def piece_offsets(kind: str, axis: int) -> tuple[tuple[int, int, int], ...]:
    if kind == DOMINO:
        return ((0, 0, 0), tuple(1 if a == axis else 0 for a in AXES))
    p, q = [a for a in AXES if a != axis]
    out = []
    for i in (0, 1):
        for j in (0, 1):
            v = [0, 0, 0]
            v[p] += i
            v[q] += j
            out.append(tuple(v))
    return tuple(sorted(out))


def piece_cells(kind: str, anchor, axis: int) -> tuple[Cell, ...]:
    x, y, z = anchor
    return tuple(Cell(x + dx, y + dy, z + dz) for dx, dy, dz in piece_offsets(kind, axis))


def family_allows(family: str, piece: Piece) -> bool:
    if family == "domino":
        return piece.kind == DOMINO
    if family == "slab":
        return piece.kind == SLAB
    if family == "mixed":
        return piece.axis == 2
    raise ValueError(f"unknown family {family!r}")


def symbol(piece: Piece, cell) -> int:
    """One byte naming the piece that covers ``cell``: kind, axis, offset to the anchor."""
    d = [cell[a] - piece.anchor[a] for a in AXES]
    return ((piece.kind == SLAB) << 5) | (piece.axis << 3) | (d[0] << 2) | (d[1] << 1) | d[2]


def piece_from_symbol(sym: int, cell) -> Piece:
    if sym >> 6 or (sym >> 3) & 3 == 3:
        raise ValueError(f"malformed symbol {sym:#x}")
    kind = SLAB if sym >> 5 else DOMINO
    axis = (sym >> 3) & 3
    anchor = Cell(cell[0] - ((sym >> 2) & 1), cell[1] - ((sym >> 1) & 1), cell[2] - (sym & 1))
    return Piece(kind, anchor, axis)


@dataclass
class ValidationReport:
    ok: bool
    problems: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.ok


class TilingError(ValueError):
    pass


class Tiling:
    """An exact partition of ``region`` into pieces of one family."""

    __slots__ = ("family", "pieces", "region", "__dict__")

    def __init__(self, region: Region, pieces: Iterable[Piece], family: str):
        if family not in FAMILIES:
            raise ValueError(f"unknown family {family!r}")
        self.region = region
        self.pieces = frozenset(pieces)
        self.family = family

    def __eq__(self, other):
        return isinstance(other, Tiling) and self.region == other.region and self.pieces == other.pieces

    def __hash__(self):
        return hash((self.region, self.pieces))

    def __len__(self):
        return len(self.pieces)

    def __repr__(self):
        return f"Tiling({self.family}, {len(self.pieces)} pieces, {self.region!r})"

    @cached_property
    def cover(self) -> dict[Cell, Piece]:
        out = {}
        for p in self.pieces:
            for c in p.cells:
                out[c] = p
        return out

    def validate(self) -> ValidationReport:
        seen: dict[Cell, Piece] = {}
        for p in sorted(self.pieces):
            if not family_allows(self.family, p):
                return ValidationReport(False, [f"{p} not allowed in a {self.family} tiling"])
            for c in p.cells:
                if c not in self.region.cells:
                    return ValidationReport(False, [f"{p} leaves the region at {tuple(c)}"])
                if c in seen:
                    return ValidationReport(False, [f"{p} overlaps {seen[c]} at {tuple(c)}"])
                seen[c] = p
        if len(seen) != len(self.region.cells):
            missing = min(self.region.cells - seen.keys())
            return ValidationReport(False, [f"cell {tuple(missing)} is uncovered"])
        return ValidationReport(True)

    def check(self) -> "Tiling":
        report = self.validate()
        if not report:
            raise TilingError(report.problems[0])
        return self

    def with_pieces(self, removed: Iterable[Piece], added: Iterable[Piece]) -> "Tiling":
        return Tiling(self.region, (self.pieces - frozenset(removed)) | frozenset(added), self.family)

    def mapped(self, q: Symmetry) -> "Tiling":
        pieces = []
        for p in self.pieces:
            cells = [q.map_cell(c) for c in p.cells]
            pieces.append(Piece(p.kind, min(cells), q.axis_image(p.axis)))
        family = self.family
        if family == "mixed" and q.axis_image(2) != 2:
            raise ValueError("symmetry does not keep the vertical axis of a mixed tiling")
        return Tiling(Region(q.map_cell(c) for c in self.region.cells), pieces, family)

    def translated(self, offset) -> "Tiling":
        ox, oy, oz = offset
        return Tiling(
            self.region.translated(offset),
            (Piece(p.kind, Cell(p.anchor[0] + ox, p.anchor[1] + oy, p.anchor[2] + oz), p.axis) for p in self.pieces),
            self.family,
        )

    def to_json(self) -> dict:
        return {
            "region": self.region.to_json(),
            "family": self.family,
            "pieces": [p.to_json() for p in sorted(self.pieces)],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Tiling":
        unknown = set(data) - {"region", "family", "pieces"}
        if unknown:
            raise ValueError(f"unknown tiling keys: {sorted(unknown)}")
        return cls(region_from_json(data["region"]), [Piece.from_json(p) for p in data["pieces"]], data["family"])

    def dump(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh)
            fh.write("\n")

    @classmethod
    def load(cls, path) -> "Tiling":
        with open(path) as fh:
            return cls.from_json(json.load(fh))


def validate(tiling: Tiling) -> ValidationReport:
    return tiling.validate()


def canonical_encode(tiling: Tiling) -> bytes:
    cover = tiling.cover
    return bytes(symbol(cover[c], c) for c in tiling.region.sorted_cells)


def canonical_decode(code: bytes, region: Region, family: str) -> Tiling:
    cells = region.sorted_cells
    if len(code) != len(cells):
        raise ValueError(f"code has {len(code)} symbols, region has {len(cells)} cells")
    pieces = {piece_from_symbol(s, c) for s, c in zip(code, cells)}
    t = Tiling(region, pieces, family)
    if canonical_encode_checked(t) != bytes(code):
        raise ValueError("code does not describe a tiling of this region")
    return t


def canonical_encode_checked(tiling: Tiling) -> bytes | None:
    if not tiling.validate():
        return None
    return canonical_encode(tiling)


def slice_vertical_slabs(t: Tiling) -> Tiling:
    """Cut each vertical slab into two z-dominoes; horizontal slabs are kept."""
    if t.family != "slab":
        raise ValueError("expected a slab tiling")
    pieces = []
    for p in t.pieces:
        if p.axis == 2:
            pieces.append(p)
            continue
        side = 1 - p.axis  # the in-floor axis of the slab
        pieces.append(Piece(DOMINO, p.anchor, 2))
        pieces.append(Piece(DOMINO, p.anchor.shifted(side), 2))
    return Tiling(t.region, pieces, "mixed")


def slab_colors_ok(t: Tiling) -> bool:
    """Every slab covers each of the four colors once."""
    return all(len({color_of(c) for c in p.cells}) == 4 for p in t.pieces if p.kind == SLAB)
