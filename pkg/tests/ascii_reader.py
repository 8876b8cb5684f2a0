"""Reads the ASCII floor diagrams back into tilings.  Test support only."""

from slablab.lattice import Cell, Region
from slablab.render import GAP
from slablab.tiling import DOMINO, SLAB, Piece, Tiling

# glyph -> (kind, axis, footprint step(s) within a floor, is upper half)
_SPECS = {
    "-": (DOMINO, 0, [(1, 0)], False),
    "|": (DOMINO, 1, [(0, 1)], False),
    "v": (DOMINO, 2, [], False),
    "^": (DOMINO, 2, [], True),
    "o": (SLAB, 2, [(1, 0), (0, 1), (1, 1)], False),
    "X": (SLAB, 0, [(0, 1)], False),
    "x": (SLAB, 0, [(0, 1)], True),
    "Y": (SLAB, 1, [(1, 0)], False),
    "y": (SLAB, 1, [(1, 0)], True),
}


def read_ascii(text: str, family: str, origin=(0, 0, 0)) -> Tiling:
    rows = [r for r in text.splitlines() if r.strip()]
    panels = [r.split(GAP) for r in rows]
    width = max(len(p) for row in panels for p in row)
    nz = max(len(row) for row in panels)
    grid = {}
    for y, row in enumerate(panels):
        for z, panel in enumerate(row):
            for x, ch in enumerate(panel.ljust(width, ".")):
                if ch != ".":
                    grid[(x, y, z)] = ch
    pieces = []
    todo = set(grid)
    for c in sorted(grid, key=lambda c: (c[2], c[0], c[1])):
        if c not in todo:
            continue
        ch = grid[c]
        kind, axis, steps, upper = _SPECS[ch]
        if upper:
            raise ValueError(f"upper half {ch!r} at {c} without its lower half")
        x, y, z = c
        foot = [(x, y)] + [(x + dx, y + dy) for dx, dy in steps]
        cells = [(a, b, z) for a, b in foot]
        if kind == SLAB and axis != 2 or kind == DOMINO and axis == 2:
            cells += [(a, b, z + 1) for a, b in foot]
        for k in cells:
            want = ch if k[2] == z else ch.swapcase() if kind == SLAB else "^"
            if grid.get(k) != want or k not in todo:
                raise ValueError(f"glyphs do not form a piece at {c}")
            todo.discard(k)
        anchor = Cell(*(min(cells)[i] + origin[i] for i in range(3)))
        pieces.append(Piece(kind, anchor, axis))
    region = Region(Cell(*(k[i] + origin[i] for i in range(3))) for k in grid)
    return Tiling(region, pieces, family)
