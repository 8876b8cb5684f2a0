"""Floor diagrams: one panel per floor, lowest floor on the left.

Within a panel x runs to the right and y runs down.  ASCII glyphs, one per cell:

    -   x-domino            |   y-domino
    v   z-domino, lower     ^   z-domino, upper
    o   horizontal slab (normal z)
    X   slab with normal x, lower floor    x   same slab, upper floor
    Y   slab with normal y, lower floor    y   same slab, upper floor
    .   cell outside the region

Upper-case glyphs mark the dark lower halves of vertical pieces, lower-case the
white upper halves.  Pieces can be recovered from the glyphs alone by pairing
cells greedily from the lexicographically smallest one.
"""

from __future__ import annotations

from .tiling import DOMINO, SLAB, Tiling

GAP = "   "

LIGHT = "#d9d9d9"
DARK = "#7f7f7f"
WHITE = "#ffffff"


def glyph(piece, cell) -> str:
    if piece.kind == DOMINO:
        if piece.axis == 0:
            return "-"
        if piece.axis == 1:
            return "|"
        return "v" if cell[2] == piece.anchor[2] else "^"
    if piece.axis == 2:
        return "o"
    lower = cell[2] == piece.anchor[2]
    letter = "x" if piece.axis == 0 else "y"
    return letter.upper() if lower else letter


def render_ascii(t: Tiling) -> str:
    (x0, y0, z0), (x1, y1, z1) = t.region.bounds
    cover = t.cover
    rows = []
    for y in range(y0, y1):
        panels = []
        for z in range(z0, z1):
            panels.append(
                "".join(glyph(cover[(x, y, z)], (x, y, z)) if (x, y, z) in cover else "." for x in range(x0, x1))
            )
        rows.append(GAP.join(panels).rstrip())
    return "\n".join(rows) + "\n"


def render_svg(t: Tiling, unit: int = 20, gap: int = 1) -> str:
    """SVG floor diagram: horizontal pieces light grey, vertical pieces dark on
    their lower floor and white on their upper floor."""
    (x0, y0, z0), (x1, y1, z1) = t.region.bounds
    w, h = x1 - x0, y1 - y0
    panel = (w + gap) * unit
    width = panel * (z1 - z0) - gap * unit + 2 * unit
    height = (h + 2) * unit
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    cells = t.region.cells
    for z in range(z0, z1):
        ox = unit + (z - z0) * panel
        for x in range(x0, x1):
            for y in range(y0, y1):
                if (x, y, z) in cells:
                    out.append(
                        f'<rect x="{ox + (x - x0) * unit}" y="{unit + (y - y0) * unit}" width="{unit}" '
                        f'height="{unit}" fill="none" stroke="#bbbbbb" stroke-width="0.5"/>'
                    )
    for p in sorted(t.pieces):
        for z in sorted({c[2] for c in p.cells}):
            foot = [c for c in p.cells if c[2] == z]
            fx = min(c[0] for c in foot)
            fy = min(c[1] for c in foot)
            fw = max(c[0] for c in foot) - fx + 1
            fh = max(c[1] for c in foot) - fy + 1
            if p.is_horizontal:
                fill = LIGHT
            else:
                fill = DARK if z == p.anchor[2] else WHITE
            ox = unit + (z - z0) * panel
            out.append(
                f'<rect x="{ox + (fx - x0) * unit}" y="{unit + (fy - y0) * unit}" width="{fw * unit}" '
                f'height="{fh * unit}" fill="{fill}" stroke="black" stroke-width="1.5"/>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(t: Tiling, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return render_ascii(t)
    if fmt == "svg":
        return render_svg(t)
    raise ValueError(f"unknown format {fmt!r}")
