"""Flips of slab and mixed tilings, flip-connected components, rigidity and the
frozen-core check.

Components are explored on canonical codes: a flip site is a set of cell
indices together with the byte patterns of every filling of that set, and a
move replaces one filling by another.
"""

from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from . import _kernels
from .enumerator import placement_table
from .lattice import AXES, CANONICAL_PAIRS, Cell, Region
from .tiling import DOMINO, SLAB, Piece, Tiling, canonical_encode, canonical_decode, symbol
from .twist import domino_flip_moves

DEFAULT_BUDGET = 10**7
DOT_MAX_NODES = 200


# tiling-level moves


def _cube_cells(corner) -> list[Cell]:
    x, y, z = corner
    return [Cell(x + i, y + j, z + k) for i, j, k in product((0, 1), repeat=3)]


def _cube_slab_fillings(corner) -> list[tuple[Piece, Piece]]:
    c = Cell(*corner)
    return [(Piece(SLAB, c, a), Piece(SLAB, c.shifted(a), a)) for a in AXES]


def _cube_vertical_dominoes(corner) -> tuple[Piece, ...]:
    x, y, z = corner
    return tuple(Piece(DOMINO, Cell(x + i, y + j, z), 2) for i, j in product((0, 1), repeat=2))


def slab_flip_moves(t: Tiling) -> list[tuple[tuple[Piece, Piece], Tiling]]:
    """Every flip of a slab tiling: two slabs filling a 2x2x2 cube, put back with
    one of the two other normals."""
    pieces = set(t.pieces)
    out = []
    for p in sorted(pieces):
        mate = Piece(SLAB, p.anchor.shifted(p.axis), p.axis)
        if mate not in pieces:
            continue
        for a, b in _cube_slab_fillings(p.anchor):
            if a.axis != p.axis:
                out.append(((p, mate), t.with_pieces((p, mate), (a, b))))
    return out


def mixed_flip_moves(t: Tiling) -> list[tuple[tuple[Piece, ...], Tiling]]:
    """Two stacked horizontal slabs <-> four z-dominoes in the same 2x2x2 box."""
    pieces = set(t.pieces)
    out = []
    for p in sorted(pieces):
        if p.kind == SLAB:
            mate = Piece(SLAB, p.anchor.shifted(2), 2)
            if mate in pieces:
                new = _cube_vertical_dominoes(p.anchor)
                out.append(((p, mate), t.with_pieces((p, mate), new)))
        elif p.kind == DOMINO:
            four = _cube_vertical_dominoes(p.anchor)
            if four[0] == p and all(d in pieces for d in four):
                new = (Piece(SLAB, p.anchor, 2), Piece(SLAB, p.anchor.shifted(2), 2))
                out.append((four, t.with_pieces(four, new)))
    return out


def flip_moves(t: Tiling) -> list:
    if t.family == "slab":
        return slab_flip_moves(t)
    if t.family == "mixed":
        return mixed_flip_moves(t)
    return domino_flip_moves(t)


# code-level sites


def _filling_bytes(pieces, cells) -> bytes:
    owner = {}
    for p in pieces:
        for c in p.cells:
            owner[c] = p
    return bytes(symbol(owner[c], c) for c in cells)


def flip_sites(region: Region, family: str) -> list[tuple[tuple[int, ...], list[bytes]]]:
    """Every place in ``region`` where a flip of ``family`` can happen."""
    index = region.index
    sites = []
    for corner in region.sorted_cells:
        if family == "domino":
            x, y, z = corner
            for a, b in ((0, 1), (0, 2), (1, 2)):
                square = sorted({Cell(*_step(corner, a, i, b, j)) for i in (0, 1) for j in (0, 1)})
                if not all(c in index for c in square):
                    continue
                fill = [
                    (Piece(DOMINO, corner, a), Piece(DOMINO, Cell(*_step(corner, b, 1)), a)),
                    (Piece(DOMINO, corner, b), Piece(DOMINO, Cell(*_step(corner, a, 1)), b)),
                ]
                sites.append((tuple(index[c] for c in square), [_filling_bytes(f, square) for f in fill]))
            continue
        cube = sorted(_cube_cells(corner))
        if not all(c in index for c in cube):
            continue
        if family == "slab":
            fill = _cube_slab_fillings(corner)
        elif family == "mixed":
            fill = [_cube_slab_fillings(corner)[2], _cube_vertical_dominoes(corner)]
        else:
            raise ValueError(f"unknown family {family!r}")
        sites.append((tuple(index[c] for c in cube), [_filling_bytes(f, cube) for f in fill]))
    return sites


def _step(cell, a, i, b=None, j=0):
    v = list(cell)
    v[a] += i
    if b is not None:
        v[b] += j
    return tuple(v)


# invariants


def _cover_decoder(table):
    anchor_pid = {}
    for pid, p in enumerate(table.pieces):
        i = table.region.index[p.anchor]
        anchor_pid[(i, table.symbols[pid][table.cells[pid].index(i)])] = pid

    def decode(code: bytes) -> list[int]:
        return [anchor_pid[(i, s)] for i, s in enumerate(code) if not s & 7]

    return decode


def invariant_evaluator(region: Region, family: str):
    """A function mapping a batch of codes to invariant values, or None when the
    region carries no twist for this family.

    Slab tilings get one twist per view axis (canonical pairs), kept only for
    axes along which the region is a cylinder; mixed tilings get the z-view
    twist; domino tilings their own twist.  Values are exact rationals.
    """
    from .transform import TwistTable

    table = placement_table(region, family)
    decode = _cover_decoder(table)
    if family == "slab":
        axes = [a for a in AXES if region.is_cylinder_along(a)]
        tables = [TwistTable(table, CANONICAL_PAIRS[a]) for a in axes]
    elif region.is_cylinder_along(2):
        axes = [2]
        tables = [TwistTable(table, CANONICAL_PAIRS[2] if family == "mixed" else None)]
    else:
        return None

    def evaluate(codes):
        covers = [decode(c) for c in codes]
        columns = [tt.effect_sums(covers) for tt in tables]
        out = []
        for r in range(len(covers)):
            vals = [_num(Fraction(int(col[r]), 4)) for col in columns]
            out.append(_label(family, axes, vals))
        return out

    return evaluate


def _num(v: Fraction):
    return int(v) if v.denominator == 1 else v


def _label(family, axes, vals):
    if family == "slab":
        full = [None, None, None]
        for a, v in zip(axes, vals):
            full[a] = v
        return tuple(full)
    return vals[0]


# components


@dataclass
class Component:
    size: int
    representative: bytes
    invariant: object = None
    invariant_constant: bool = True
    rigid: bool = False
    codes: list[bytes] | None = None

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "representative": self.representative.hex(),
            "invariant": _json_value(self.invariant),
            "invariant_constant": self.invariant_constant,
            "rigid": self.rigid,
        }


def _json_value(v):
    if isinstance(v, tuple):
        return [_json_value(x) for x in v]
    if isinstance(v, Fraction):
        return str(v)
    return v


@dataclass
class FlipGraphReport:
    region: Region
    family: str
    components: list[Component]
    total: int
    truncated: bool = False
    edges: list[tuple[bytes, bytes]] | None = field(default=None, repr=False)

    @property
    def count(self) -> int:
        return len(self.components)

    @property
    def sizes(self) -> list[int]:
        return [c.size for c in self.components]

    def partition(self) -> set[frozenset[bytes]]:
        return {frozenset(c.codes or ()) for c in self.components}

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "cells": len(self.region.cells),
            "tilings": self.total,
            "components": self.count,
            "truncated": self.truncated,
            "list": [c.to_json() for c in self.components],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def to_dot(self) -> str:
        """GraphViz source of the flip graph (small graphs only)."""
        if self.edges is None or self.total > DOT_MAX_NODES:
            raise ValueError(f"flip graph dump is limited to {DOT_MAX_NODES} nodes")
        lines = ["graph flips {"]
        for comp in self.components:
            for code in comp.codes or ():
                lines.append(f'  "{code.hex()}";')
        for a, b in self.edges:
            lines.append(f'  "{a.hex()}" -- "{b.hex()}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _explore(seed: bytes, sites, visited: set, budget: int, edges=None) -> tuple[list[bytes], bool]:
    comp = [seed]
    visited.add(seed)
    queue = deque([seed])
    while queue:
        code = queue.popleft()
        for nb in _kernels.flip_neighbors(code, sites):
            if edges is not None and code < nb:
                edges.append((code, nb))
            if nb in visited:
                continue
            if len(visited) >= budget:
                return comp, True
            visited.add(nb)
            comp.append(nb)
            queue.append(nb)
    return comp, False


def _finish(comp_codes, sites, evaluate, keep_codes) -> Component:
    rep = min(comp_codes)
    inv, constant = None, True
    if evaluate is not None:
        values = evaluate(comp_codes)
        inv = values[0]
        constant = all(v == inv for v in values)
    rigid = len(comp_codes) == 1 and not _kernels.flip_neighbors(comp_codes[0], sites)
    return Component(len(comp_codes), rep, inv, constant, rigid, sorted(comp_codes) if keep_codes else None)


def components(
    region: Region,
    family: str,
    budget: int = DEFAULT_BUDGET,
    invariants: bool = True,
    shuffle_seed: int | None = None,
    keep_codes: bool = True,
) -> FlipGraphReport:
    """Partition every tiling of ``region`` into flip components.

    Seeds are taken in enumeration order (or shuffled with ``shuffle_seed``);
    the resulting partition does not depend on the order.  Components are
    reported by increasing representative (the smallest code).
    """
    sites = flip_sites(region, family)
    table = placement_table(region, family)
    seeds = list(table.codes(budget + 1))
    truncated = len(seeds) > budget
    seeds = seeds[:budget]
    if shuffle_seed is not None:
        random.Random(shuffle_seed).shuffle(seeds)
    evaluate = invariant_evaluator(region, family) if invariants else None
    edges = [] if len(seeds) <= DOT_MAX_NODES and not truncated else None
    visited: set[bytes] = set()
    comps = []
    for seed in seeds:
        if seed in visited:
            continue
        codes, cut = _explore(seed, sites, visited, budget, edges)
        truncated |= cut
        comps.append(_finish(codes, sites, evaluate, keep_codes))
    comps.sort(key=lambda c: c.representative)
    return FlipGraphReport(region, family, comps, len(visited), truncated, edges)


def component_of(t: Tiling, budget: int = DEFAULT_BUDGET, invariants: bool = True) -> tuple[Component, bool]:
    """Flip closure of one tiling, without enumerating the region.  Returns the
    component and a truncation flag."""
    sites = flip_sites(t.region, t.family)
    codes, cut = _explore(canonical_encode(t), sites, set(), budget)
    evaluate = invariant_evaluator(t.region, t.family) if invariants else None
    return _finish(codes, sites, evaluate, True), cut


def decode_component(comp: Component, region: Region, family: str) -> list[Tiling]:
    return [canonical_decode(c, region, family) for c in comp.codes or ()]


# frozen core


def pieces_inside(t: Tiling, lo, hi, closed_axes=()) -> list[Piece]:
    """Pieces contained in the interior of the box ``[lo, hi]`` (point coordinates).

    Interior means strict inequalities, except along ``closed_axes`` where the
    piece may touch the faces of the box.
    """
    out = []
    for p in t.pieces:
        cells = p.cells
        ok = True
        for a in AXES:
            a_lo = min(c[a] for c in cells)
            a_hi = max(c[a] for c in cells) + 1
            if a in closed_axes:
                ok = lo[a] <= a_lo and a_hi <= hi[a]
            else:
                ok = lo[a] < a_lo and a_hi < hi[a]
            if not ok:
                break
        if ok:
            out.append(p)
    return out


def frozen_core_count(t: Tiling, lo, hi, closed_axes=()) -> int:
    """Number of ways to tile the union of the pieces of ``t`` inside ``[lo, hi]``
    with pieces of the same family (1 means the core is frozen)."""
    from .enumerator import count

    inner = pieces_inside(t, lo, hi, closed_axes)
    if not inner:
        return 1
    region = Region(c for p in inner for c in p.cells)
    return count(region, t.family)
