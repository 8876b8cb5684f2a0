"""Generators for explicit slab tilings: the rigid 2N x 2N x 5 patterns, the
solenoid tilings of 6n x 6n x 8n boxes with prescribed fluxes, and the composed
16n cube realizing a prescribed even triple twist.

Layout notes (coordinates are cell min corners, ``S = 2N`` or ``6n``):

rigid pattern, five floors per copy
    floor 0   perimeter ring of vertical slabs spanning floors 0-1 (normal y on
              the rows y = 0, S-1 in x-pairs from 0; normal x on the columns
              x = 0, S-1 in y-pairs from 1); interior horizontal slabs on the
              odd grid x, y in {1, 3, ..., S-3}
    floor 1   rows y = 1, S-2 carry vertical slabs spanning floors 1-2 (x-pairs
              from 1); rows 2..S-3 horizontal slabs at odd x, even y
    floor 2   corner columns: vertical slabs normal x at y-pairs {0,1} and
              {S-2,S-1} spanning floors 2-3; rows 0, S-1 vertical slabs normal
              y at odd x; rows 2..S-3 horizontal slabs at even x, even y
    floor 3   columns x = 0, S-1 vertical slabs at even y-pairs 2..S-4 spanning
              floors 3-4; interior horizontal slabs on the odd grid
    floor 4   rows {0,1} and {S-2,S-1} horizontal at even x; rows 2..S-3
              horizontal at odd x, even y

solenoid
    beta  = square annulus [0,6n]^2 minus [2n,4n]^2 in the (x, z) plane,
            extruded over y in [2n, 4n]
    gamma = the same annulus in the (y, z) plane, shifted up by 2n in z,
            extruded over x in [2n, 4n]
    The two tubes are linked and disjoint.  Each tube is cut into 2n x n = 2n^2
    annuli: a ring of width one (ring r runs around [r, 6n-r)^2) times a pair of
    consecutive layers of the thickness coordinate.  An annulus has exactly two
    slab tilings, by dominoes of its ring cycle thickened by two; phase 0
    starts the first domino at the ring's min corner, phase 1 one cell later.
    The flux of an annulus is +1/2 in phase 0 and -1/2 in phase 1.  The rest
    of the box (alpha) gets horizontal slabs on the even grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .lattice import Cell, Region, Symmetry
from .tiling import SLAB, Piece, Tiling

# Sign of Tw_z(solenoid(n, u, v)) / (2uv), fixed from n = 1.
SOLENOID_SIGN = 1

# Cyclic relabellings carrying the solenoid's z axis to axis j, and the sign
# relating the solenoid twist to component j of the image, fixed from n = 1.
_ORIENT = {
    0: Symmetry(((0, 0, 1), (1, 0, 0), (0, 1, 0))),
    1: Symmetry(((0, 1, 0), (0, 0, 1), (1, 0, 0))),
    2: Symmetry.identity(),
}
ORIENT_SIGN = {0: 1, 1: 1, 2: 1}


class ConstructionError(ValueError):
    pass


def rigid_floors(N: int, z0: int = 0) -> list[Piece]:
    """One five-floor copy of the rigid pattern on a 2N x 2N base, starting at floor z0."""
    S = 2 * N
    out: list[Piece] = []

    def h(x, y, z):
        out.append(Piece(SLAB, Cell(x, y, z0 + z), 2))

    def vx(x, y, z):
        out.append(Piece(SLAB, Cell(x, y, z0 + z), 0))

    def vy(x, y, z):
        out.append(Piece(SLAB, Cell(x, y, z0 + z), 1))

    odd = range(1, S - 2, 2)
    even = range(0, S, 2)
    mid = range(2, S - 3, 2)
    for x in even:
        vy(x, 0, 0)
        vy(x, S - 1, 0)
    for y in odd:
        vx(0, y, 0)
        vx(S - 1, y, 0)
    for x in odd:
        for y in odd:
            h(x, y, 0)
    for x in odd:
        vy(x, 1, 1)
        vy(x, S - 2, 1)
        for y in mid:
            h(x, y, 1)
    for x in (0, S - 1):
        for y in (0, S - 2):
            vx(x, y, 2)
    for x in odd:
        vy(x, 0, 2)
        vy(x, S - 1, 2)
    for x in even:
        for y in mid:
            h(x, y, 2)
    for y in mid:
        vx(0, y, 3)
        vx(S - 1, y, 3)
    for x in odd:
        for y in odd:
            h(x, y, 3)
    for x in even:
        h(x, 0, 4)
        h(x, S - 2, 4)
    for x in odd:
        for y in mid:
            h(x, y, 4)
    return out


def rigid_pattern(N: int, l: int = 1) -> Tiling:
    """The flip-free tiling of the 2N x 2N x 5l box: l stacked copies of the pattern."""
    if N < 3 or l < 1:
        raise ConstructionError("rigid pattern needs N >= 3 and l >= 1")
    pieces = []
    for k in range(l):
        pieces += rigid_floors(N, 5 * k)
    return Tiling(Region.box(2 * N, 2 * N, 5 * l), pieces, "slab")


def rigid_twist(N: int, l: int = 1) -> int:
    """Closed form of Tw_z(rigid_pattern(N, l)) for the canonical z pair."""
    return 2 * (N - 1) * (N - 2) * l


@dataclass(frozen=True)
class FluxPair:
    u: int
    v: int

    def check(self, n: int) -> None:
        if abs(self.u) > n * n or abs(self.v) > n * n:
            raise ConstructionError(f"fluxes must lie in [-{n * n}, {n * n}]")


def ring_cycle(lo: int, hi: int) -> list[tuple[int, int]]:
    """Boundary squares of [lo, hi)^2 in cyclic order from (lo, lo)."""
    a0, a1 = lo, hi - 1
    return (
        [(a, a0) for a in range(a0, a1)]
        + [(a1, b) for b in range(a0, a1)]
        + [(a, a1) for a in range(a1, a0, -1)]
        + [(a0, b) for b in range(a1, a0, -1)]
    )


def phases_for_flux(flux: int, n: int) -> list[int]:
    """Greedy phases for the 2n^2 annuli of a tube: phase 0 (+1/2) first, until the
    total reaches ``flux``."""
    total = 2 * n * n
    plus = flux + n * n
    return [0] * plus + [1] * (total - plus)


def _tube(n: int, phases, embed) -> list[list[tuple[int, int, int]]]:
    blocks = []
    k = 0
    for r in range(2 * n):
        cyc = ring_cycle(r, 6 * n - r)
        size = len(cyc)
        for j in range(n):
            p = phases[k]
            k += 1
            for i in range(p, size + p, 2):
                pair = (cyc[i % size], cyc[(i + 1) % size])
                blocks.append([embed(a, b, 2 * j + dt) for a, b in pair for dt in (0, 1)])
    return blocks


def _slab_of(cells) -> Piece:
    normal = next(a for a in range(3) if len({c[a] for c in cells}) == 1)
    return Piece(SLAB, Cell(*min(cells)), normal)


def solenoid(n: int, flux: FluxPair | tuple[int, int]) -> Tiling:
    """Slab tiling of [0,6n] x [0,6n] x [0,8n] with TTw = (0, 0, 2uv)."""
    if n < 1:
        raise ConstructionError("n must be positive")
    if not isinstance(flux, FluxPair):
        flux = FluxPair(*flux)
    flux.check(n)
    return solenoid_from_phases(n, phases_for_flux(flux.u, n), phases_for_flux(flux.v, n))


def solenoid_from_phases(n: int, beta_phases, gamma_phases) -> Tiling:
    S = 6 * n
    beta = _tube(n, beta_phases, lambda a, b, t: (a, 2 * n + t, b))
    gamma = _tube(n, gamma_phases, lambda a, b, t: (2 * n + t, a, b + 2 * n))
    pieces = [_slab_of(c) for c in beta + gamma]
    used = {c for cs in beta + gamma for c in cs}
    for z in range(8 * n):
        for x in range(0, S, 2):
            for y in range(0, S, 2):
                if (x, y, z) not in used:
                    pieces.append(Piece(SLAB, Cell(x, y, z), 2))
    return Tiling(Region.box(S, S, 8 * n), pieces, "slab")


def tube_flux(phases) -> float:
    return sum(0.5 - p for p in phases)


def composed_parameters(n: int, t: tuple[int, int, int]) -> list[tuple[int, int, int, int]]:
    """``(j, i, u, v)`` for the six solenoids: u1 = n^2, v1 = floor(t/2n^2),
    u2 = 1, v2 = n^2 * frac(t/2n^2)."""
    check_triple(n, t)
    out = []
    m = 2 * n * n
    for j in range(3):
        v1, rem = divmod(t[j], m)
        out.append((j, 1, n * n, v1))
        out.append((j, 2, 1, rem // 2))
    return out


def check_triple(n: int, t) -> None:
    bound = 2 * n**4
    if len(t) != 3:
        raise ConstructionError("need a triple")
    for c in t:
        if c % 2 or abs(c) > bound:
            raise ConstructionError(f"components must be even and within [-{bound}, {bound}]")


def _pad_to_cube(pieces: list[Piece], occupied: set, side: int, origin) -> list[Piece]:
    ox, oy, oz = origin
    out = list(pieces)
    for z in range(side):
        for x in range(0, side, 2):
            for y in range(0, side, 2):
                c = (ox + x, oy + y, oz + z)
                if c not in occupied:
                    out.append(Piece(SLAB, Cell(*c), 2))
    return out


def oriented_solenoid(n: int, axis: int, u: int, v: int) -> Tiling:
    """A solenoid whose only nonzero twist component is along ``axis``."""
    base = solenoid(n, FluxPair(u, ORIENT_SIGN[axis] * SOLENOID_SIGN * v))
    return base.mapped(_ORIENT[axis])


def composed(n: int, t) -> Tiling:
    """Slab tiling of the 16n cube with TTw = t (even components, |t_j| <= 2n^4)."""
    t = tuple(int(c) for c in t)
    params = composed_parameters(n, t)
    side = 8 * n
    corners = list(product((0, side), repeat=3))
    pieces: list[Piece] = []
    for k, (j, _i, u, v) in enumerate(params):
        sub = oriented_solenoid(n, j, u, v).translated(corners[k])
        occupied = set(sub.region.cells)
        pieces += _pad_to_cube(list(sub.pieces), occupied, side, corners[k])
    for corner in corners[len(params):]:
        pieces += _pad_to_cube([], set(), side, corner)
    return Tiling(Region.box(2 * side, 2 * side, 2 * side), pieces, "slab")
