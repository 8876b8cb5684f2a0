"""Integer lattice geometry: cells, regions, the slab-type coloring, good pairs
and the signed-permutation symmetries of Z^3.

A cell is named by the min corner ``(x, y, z)`` of the unit cube
``[x, x+1] x [y, y+1] x [z, z+1]``.  Axes are the integers 0, 1, 2.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple

AXES = (0, 1, 2)
AXIS_NAMES = "xyz"

# view axis -> the two in-plane axes, in cyclic order
VIEW_PLANE = {2: (0, 1), 0: (1, 2), 1: (2, 0)}


def parse_axis(axis: int | str) -> int:
    if isinstance(axis, str):
        if axis not in ("x", "y", "z"):
            raise ValueError(f"unknown axis {axis!r}")
        return AXIS_NAMES.index(axis)
    if axis not in AXES:
        raise ValueError(f"unknown axis {axis!r}")
    return axis


class Cell(NamedTuple):
    x: int
    y: int
    z: int

    def shifted(self, axis: int, step: int = 1) -> "Cell":
        c = list(self)
        c[axis] += step
        return Cell(*c)

    def __add__(self, other):  # type: ignore[override]
        return Cell(self[0] + other[0], self[1] + other[1], self[2] + other[2])


class Color(Enum):
    GREEN = (0, 0)
    YELLOW = (1, 0)
    BLUE = (0, 1)
    RED = (1, 1)


def phi(cell: Iterable[int]) -> tuple[int, int]:
    x, y, z = cell
    return ((y + z) % 2, (x + z) % 2)


def color_of(cell: Iterable[int]) -> Color:
    return Color(phi(cell))


@dataclass(frozen=True, order=True)
class GoodPair:
    """A view axis plus the parity of the in-plane coordinate sum of its good cells."""

    axis: int
    parity: int = 0

    def __post_init__(self):
        object.__setattr__(self, "axis", parse_axis(self.axis))
        if self.parity not in (0, 1):
            raise ValueError("parity must be 0 or 1")

    @property
    def complement(self) -> "GoodPair":
        return GoodPair(self.axis, 1 - self.parity)

    def contains(self, cell: Iterable[int]) -> bool:
        return is_good(cell, self)

    @property
    def colors(self) -> frozenset[Color]:
        # every color class meets the unit cube [0,2)^3, so sampling it is enough
        return frozenset(color_of(c) for c in itertools.product((0, 1), repeat=3) if is_good(c, self))

    @classmethod
    def parse(cls, text: str) -> "GoodPair":
        axis, _, parity = text.partition(",")
        return cls(parse_axis(axis.strip()), int(parity or 0))

    def __str__(self):
        return f"{AXIS_NAMES[self.axis]},{self.parity}"


CANONICAL_PAIRS = {a: GoodPair(a, 0) for a in AXES}


def is_good(cell: Iterable[int], pair: GoodPair) -> bool:
    c = tuple(cell)
    b_axis, c_axis = VIEW_PLANE[pair.axis]
    return (c[b_axis] + c[c_axis]) % 2 == pair.parity


class Region:
    """A finite set of unit cubes.  Box and cylinder are predicates, not subtypes."""

    __slots__ = ("cells", "__dict__")

    def __init__(self, cells: Iterable[Iterable[int]]):
        self.cells = frozenset(Cell(*c) for c in cells)

    @classmethod
    def box(cls, lx: int, ly: int, lz: int, origin: Iterable[int] = (0, 0, 0)) -> "Region":
        ox, oy, oz = origin
        return cls(itertools.product(range(ox, ox + lx), range(oy, oy + ly), range(oz, oz + lz)))

    @classmethod
    def cylinder(cls, disk: Iterable[Iterable[int]], height: int, base: int = 0) -> "Region":
        disk = [tuple(d) for d in disk]
        return cls((x, y, z) for (x, y) in disk for z in range(base, base + height))

    def __len__(self):
        return len(self.cells)

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.sorted_cells)

    def __contains__(self, cell):
        return cell in self.cells

    def __eq__(self, other):
        return isinstance(other, Region) and self.cells == other.cells

    def __hash__(self):
        return hash(self.cells)

    def __repr__(self):
        if self.is_box():
            lo, hi = self.bounds
            dims = "x".join(str(h - l) for l, h in zip(lo, hi))
            return f"Region(box {dims} at {tuple(lo)})"
        return f"Region({len(self.cells)} cells)"

    @cached_property
    def sorted_cells(self) -> tuple[Cell, ...]:
        return tuple(sorted(self.cells))

    @cached_property
    def index(self) -> dict[Cell, int]:
        return {c: i for i, c in enumerate(self.sorted_cells)}

    @cached_property
    def bounds(self) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
        """Half-open bounding box ``(lo, hi)``; ``((0,0,0),(0,0,0))`` when empty."""
        if not self.cells:
            return (0, 0, 0), (0, 0, 0)
        lo = tuple(min(c[a] for c in self.cells) for a in AXES)
        hi = tuple(max(c[a] for c in self.cells) + 1 for a in AXES)
        return lo, hi

    @property
    def dims(self) -> tuple[int, int, int]:
        lo, hi = self.bounds
        return tuple(h - l for l, h in zip(lo, hi))

    def is_box(self) -> bool:
        lx, ly, lz = self.dims
        return bool(self.cells) and lx * ly * lz == len(self.cells)

    def is_cylinder_along(self, axis: int = 2) -> bool:
        """True when the region is D x [a, b] along ``axis`` with D a simply
        connected quadriculated disk."""
        axis = parse_axis(axis)
        if not self.cells:
            return False
        lo, hi = self.bounds
        p, q = VIEW_PLANE[axis]
        disk = {(c[p], c[q]) for c in self.cells}
        if len(disk) * (hi[axis] - lo[axis]) != len(self.cells):
            return False
        return _is_disk(disk)

    def translated(self, offset: Iterable[int]) -> "Region":
        ox, oy, oz = offset
        return Region((x + ox, y + oy, z + oz) for x, y, z in self.cells)

    def to_json(self) -> dict:
        if self.is_box():
            lo, _ = self.bounds
            return {"box": list(self.dims), "origin": list(lo)}
        return {"cells": [list(c) for c in self.sorted_cells]}

    @classmethod
    def from_json(cls, data: dict) -> "Region":
        return region_from_json(data)


def _is_disk(squares: set[tuple[int, int]]) -> bool:
    """Connected and simply connected (4-connected squares, no holes)."""
    start = next(iter(squares))
    seen = {start}
    stack = [start]
    while stack:
        x, y = stack.pop()
        for n in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            if n in squares and n not in seen:
                seen.add(n)
                stack.append(n)
    if len(seen) != len(squares):
        return False
    # complement inside a padded bounding box must be 8-connected to the outside
    xs = [s[0] for s in squares]
    ys = [s[1] for s in squares]
    x0, x1, y0, y1 = min(xs) - 1, max(xs) + 1, min(ys) - 1, max(ys) + 1
    outside = {(x, y) for x in range(x0, x1 + 1) for y in range(y0, y1 + 1)} - squares
    seen = {(x0, y0)}
    stack = [(x0, y0)]
    while stack:
        x, y = stack.pop()
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                n = (x + dx, y + dy)
                if n in outside and n not in seen:
                    seen.add(n)
                    stack.append(n)
    if len(seen) != len(outside):
        return False
    # pinch points (two squares touching only at a corner) make the interior non-simple
    for x, y in squares:
        for dx, dy in ((1, 1), (1, -1)):
            if (x + dx, y + dy) in squares and (x + dx, y) not in squares and (x, y + dy) not in squares:
                return False
    return True


_REGION_KEYS = {"box": {"box", "origin"}, "cells": {"cells"}, "disk": {"disk", "height", "base"}}


def region_from_json(data: dict) -> Region:
    if not isinstance(data, dict):
        raise ValueError("region must be a JSON object")
    kinds = [k for k in _REGION_KEYS if k in data]
    if len(kinds) != 1:
        raise ValueError("region needs exactly one of 'box', 'cells', 'disk'")
    kind = kinds[0]
    unknown = set(data) - _REGION_KEYS[kind]
    if unknown:
        raise ValueError(f"unknown region keys: {sorted(unknown)}")
    if kind == "box":
        dims = [int(v) for v in data["box"]]
        if len(dims) != 3 or min(dims) < 1:
            raise ValueError("box needs three positive sides")
        return Region.box(*dims, origin=data.get("origin", (0, 0, 0)))
    if kind == "cells":
        return Region(tuple(int(v) for v in c) for c in data["cells"])
    if "height" not in data:
        raise ValueError("disk region needs 'height'")
    return Region.cylinder(data["disk"], int(data["height"]), int(data.get("base", 0)))


def load_region(path) -> Region:
    with open(path) as fh:
        return region_from_json(json.load(fh))


def enumerate_slab_type_colorings(region: Region) -> Iterator[dict[Cell, Color]]:
    """Yield every 4-coloring of ``region`` under which each slab placement
    inside it covers four distinct colors.

    Backtracking in lex cell order with forward checking over the slab
    placements through the current cell.
    """
    cells = region.sorted_cells
    if not cells:
        return
    placements = [tuple(s) for s in _slab_placements(region)]
    through: dict[Cell, list[tuple[Cell, ...]]] = {c: [] for c in cells}
    for s in placements:
        for c in s:
            through[c].append(s)
    colors = list(Color)
    assignment: dict[Cell, Color] = {}

    def consistent(cell: Cell, color: Color) -> bool:
        for s in through[cell]:
            for other in s:
                if other != cell and assignment.get(other) is color:
                    return False
        return True

    def rec(i: int):
        if i == len(cells):
            yield dict(assignment)
            return
        cell = cells[i]
        for color in colors:
            if consistent(cell, color):
                assignment[cell] = color
                yield from rec(i + 1)
                del assignment[cell]

    yield from rec(0)


def _slab_placements(region: Region) -> Iterator[list[Cell]]:
    for c in region.sorted_cells:
        for normal in AXES:
            p, q = [a for a in AXES if a != normal]
            block = [c.shifted(p, i).shifted(q, j) for i in (0, 1) for j in (0, 1)]
            if all(b in region.cells for b in block):
                yield block


@dataclass(frozen=True)
class Symmetry:
    """The lattice map ``w -> translation + matrix @ w`` for a signed permutation matrix."""

    matrix: tuple[tuple[int, int, int], ...]
    translation: tuple[int, int, int] = (0, 0, 0)

    def __post_init__(self):
        m = tuple(tuple(int(v) for v in row) for row in self.matrix)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "translation", tuple(int(v) for v in self.translation))
        for row in m:
            if sorted(abs(v) for v in row) != [0, 0, 1]:
                raise ValueError("matrix must be a signed permutation")
        for col in zip(*m):
            if sorted(abs(v) for v in col) != [0, 0, 1]:
                raise ValueError("matrix must be a signed permutation")

    @classmethod
    def identity(cls) -> "Symmetry":
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    @classmethod
    def reflection(cls, axis: int) -> "Symmetry":
        axis = parse_axis(axis)
        return cls(tuple(tuple((-1 if i == axis else 1) if i == j else 0 for j in AXES) for i in AXES))

    @classmethod
    def rotation(cls, axis: int) -> "Symmetry":
        """Quarter turn about ``axis``, positive in the cyclic plane order."""
        axis = parse_axis(axis)
        p, q = VIEW_PLANE[axis]
        m = [[0] * 3 for _ in AXES]
        m[axis][axis] = 1
        m[q][p] = 1
        m[p][q] = -1
        return cls(tuple(tuple(r) for r in m))

    @classmethod
    def all_signed_permutations(cls) -> list["Symmetry"]:
        out = []
        for perm in itertools.permutations(AXES):
            for signs in itertools.product((1, -1), repeat=3):
                m = [[0] * 3 for _ in AXES]
                for i, j in enumerate(perm):
                    m[i][j] = signs[i]
                out.append(cls(tuple(tuple(r) for r in m)))
        return out

    @property
    def sign(self) -> int:
        m = self.matrix
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )

    def axis_image(self, axis: int) -> int:
        """The axis that ``e_axis`` is carried to."""
        return next(i for i in AXES if self.matrix[i][axis])

    def map_point(self, w: Iterable[int]) -> tuple[int, int, int]:
        w = tuple(w)
        return tuple(self.translation[i] + sum(self.matrix[i][j] * w[j] for j in AXES) for i in AXES)

    def map_cell(self, cell: Iterable[int]) -> Cell:
        """Image of a unit cube, named by its min corner."""
        cell = tuple(cell)
        p = self.map_point(cell)
        # a negative entry sends the cube's far face to the min side
        return Cell(*(p[i] - (1 if sum(self.matrix[i]) < 0 else 0) for i in AXES))

    def inverse(self) -> "Symmetry":
        mt = tuple(tuple(self.matrix[j][i] for j in AXES) for i in AXES)
        t = tuple(-sum(mt[i][j] * self.translation[j] for j in AXES) for i in AXES)
        return Symmetry(mt, t)

    def then(self, other: "Symmetry") -> "Symmetry":
        """``other`` after ``self``."""
        m = tuple(tuple(sum(other.matrix[i][k] * self.matrix[k][j] for k in AXES) for j in AXES) for i in AXES)
        return Symmetry(m, other.map_point(self.translation))

    def map_pair(self, pair: GoodPair) -> GoodPair:
        """Transport a good pair so that q(c) is good for the image iff c is good."""
        axis = self.axis_image(pair.axis)
        probe = Cell(0, 0, 0)
        parity = pair.parity if is_good(probe, pair) == is_good(self.map_cell(probe), GoodPair(axis, pair.parity)) else 1 - pair.parity
        return GoodPair(axis, parity)

    def normalizing(self, region: Region) -> "Symmetry":
        """Same linear part, translated so the image of ``region`` keeps its bounding-box min corner."""
        img = Region(self.map_cell(c) for c in region.cells)
        lo0, _ = region.bounds
        lo1, _ = img.bounds
        t = tuple(self.translation[i] + lo0[i] - lo1[i] for i in AXES)
        return Symmetry(self.matrix, t)


def apply_symmetry(q: Symmetry, obj, normalize: bool = False):
    """Image of a region or tiling.  With ``normalize`` the result is translated back
    onto the source bounding-box corner."""
    from .tiling import Tiling

    region = obj.region if isinstance(obj, Tiling) else obj
    if normalize:
        q = q.normalizing(region)
    if isinstance(obj, Tiling):
        return obj.mapped(q)
    if isinstance(obj, Region):
        return Region(q.map_cell(c) for c in obj.cells)
    raise TypeError(f"cannot apply a symmetry to {type(obj).__name__}")
