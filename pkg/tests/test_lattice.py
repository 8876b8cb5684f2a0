import itertools
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from slablab.lattice import (
    CANONICAL_PAIRS,
    Cell,
    Color,
    GoodPair,
    Region,
    Symmetry,
    apply_symmetry,
    color_of,
    enumerate_slab_type_colorings,
    is_good,
    phi,
    region_from_json,
)

cells = st.builds(Cell, st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20))
pairs = st.builds(GoodPair, st.integers(0, 2), st.integers(0, 1))


def test_colors_of_small_cells():
    assert color_of((0, 0, 0)) is Color.GREEN
    assert color_of((1, 0, 0)) is Color.BLUE
    assert color_of((1, 1, 0)) is Color.RED
    assert color_of((0, 1, 0)) is Color.YELLOW


def test_good_cells():
    assert is_good((0, 0, 0), GoodPair(2, 0))
    assert not is_good((1, 0, 0), GoodPair(2, 0))
    assert is_good((1, 0, 5), GoodPair(0, 1))


def test_canonical_pairs_contain_green():
    for axis, pair in CANONICAL_PAIRS.items():
        assert pair.axis == axis
        assert Color.GREEN in pair.colors
    assert CANONICAL_PAIRS[2].colors == {Color.GREEN, Color.RED}
    # with phi the x view pairs green with blue and the y view pairs green with yellow
    assert CANONICAL_PAIRS[0].colors == {Color.GREEN, Color.BLUE}
    assert CANONICAL_PAIRS[1].colors == {Color.GREEN, Color.YELLOW}


def test_pair_parse_and_str():
    k = GoodPair.parse("x,1")
    assert k == GoodPair(0, 1)
    assert GoodPair.parse(str(k)) == k
    with pytest.raises(ValueError):
        GoodPair(0, 2)


@given(cells, pairs)
def test_good_xor_complement(c, k):
    assert is_good(c, k) != is_good(c, k.complement)
    assert k.complement.complement == k


@given(cells)
def test_color_depends_only_on_phi(c):
    shifted = Cell(c.x + 2, c.y - 4, c.z + 6)
    assert phi(shifted) == phi(c)
    assert color_of(shifted) is color_of(c)


@given(pairs)
def test_pair_colors_partition(k):
    assert k.colors | k.complement.colors == set(Color)
    assert not k.colors & k.complement.colors


def test_region_basics():
    r = Region.box(2, 3, 4, origin=(-1, 0, 2))
    assert len(r) == 24
    assert r.bounds == ((-1, 0, 2), (1, 3, 6))
    assert r.dims == (2, 3, 4)
    assert r.is_box()
    assert r.is_cylinder_along(0) and r.is_cylinder_along(2)
    assert r.sorted_cells[0] == Cell(-1, 0, 2)
    holed = Region(c for c in r.cells if c != Cell(0, 1, 3))
    assert not holed.is_box()


def test_cylinders():
    disk = [(0, 0), (1, 0), (1, 1), (2, 1)]
    r = Region.cylinder(disk, 3)
    assert r.is_cylinder_along(2)
    assert not r.is_cylinder_along(0)
    ring = [(x, y) for x in range(3) for y in range(3) if (x, y) != (1, 1)]
    assert not Region.cylinder(ring, 2).is_cylinder_along(2)
    pinch = [(0, 0), (1, 1), (0, 1)]  # fine: an L tromino
    assert Region.cylinder(pinch, 1).is_cylinder_along(2)
    diagonal = [(0, 0), (1, 1)]
    assert not Region.cylinder(diagonal, 1).is_cylinder_along(2)


def test_region_json_forms(tmp_path):
    box = region_from_json({"box": [2, 2, 1], "origin": [1, 1, 1]})
    assert box == Region.box(2, 2, 1, (1, 1, 1))
    assert region_from_json({"cells": [[0, 0, 0], [1, 0, 0]]}) == Region([(0, 0, 0), (1, 0, 0)])
    assert region_from_json({"disk": [[0, 0], [0, 1]], "height": 2}) == Region.box(1, 2, 2)
    with pytest.raises(ValueError):
        region_from_json({"box": [2, 2, 2], "colour": "red"})
    r = Region.cylinder([(0, 0), (1, 0), (1, 1)], 2)
    assert Region.from_json(json.loads(json.dumps(r.to_json()))) == r


def test_two_by_two_by_one_colorings():
    assert sum(1 for _ in enumerate_slab_type_colorings(Region.box(2, 2, 1))) == 24


def _brute_force_colorings(region):
    cells = region.sorted_cells
    slabs = []
    for c in cells:
        for n in range(3):
            a, b = [i for i in range(3) if i != n]
            block = []
            for i, j in itertools.product((0, 1), repeat=2):
                v = list(c)
                v[a] += i
                v[b] += j
                block.append(Cell(*v))
            if all(x in region for x in block):
                slabs.append(block)
    idx = {c: i for i, c in enumerate(cells)}
    n = 0
    for colors in itertools.product(range(4), repeat=len(cells)):
        if all(len({colors[idx[x]] for x in s}) == 4 for s in slabs):
            n += 1
    return n


def test_cube_colorings_match_brute_force():
    cube = Region.box(2, 2, 2)
    assert _brute_force_colorings(cube) == 24
    assert sum(1 for _ in enumerate_slab_type_colorings(cube)) == 24


@pytest.mark.parametrize("dims", list(itertools.combinations_with_replacement((2, 3, 4), 3)))
def test_box_coloring_is_unique_up_to_renaming(dims):
    region = Region.box(*dims)
    found = list(enumerate_slab_type_colorings(region))
    assert len(found) == 24
    for coloring in found:
        rename = {}
        for c, col in coloring.items():
            assert rename.setdefault(color_of(c), col) is col


def test_symmetry_basics():
    assert len(Symmetry.all_signed_permutations()) == 48
    assert Symmetry.reflection(2).sign == -1
    assert Symmetry.rotation(2).sign == 1
    r = Region.box(3, 2, 2)
    assert apply_symmetry(Symmetry.identity(), r) == r
    square = Region.box(3, 3, 2)
    turned = apply_symmetry(Symmetry.rotation(2), square, normalize=True)
    assert turned == square
    flat = Region.box(4, 2, 3)
    assert apply_symmetry(Symmetry.rotation(2), flat, normalize=True).dims == (2, 4, 3)


@given(st.sampled_from(Symmetry.all_signed_permutations()), st.lists(cells, min_size=1, max_size=8))
def test_symmetry_preserves_adjacency(q, pts):
    for a in pts:
        for axis in range(3):
            b = a.shifted(axis)
            qa, qb = q.map_cell(a), q.map_cell(b)
            assert sum(abs(u - v) for u, v in zip(qa, qb)) == 1
    assert len({q.map_cell(p) for p in pts}) == len(set(pts))


@given(st.sampled_from(Symmetry.all_signed_permutations()), cells, pairs)
def test_map_pair_transports_goodness(q, c, k):
    assert is_good(c, k) == is_good(q.map_cell(c), q.map_pair(k))


@given(st.sampled_from(Symmetry.all_signed_permutations()), st.sampled_from(Symmetry.all_signed_permutations()), cells)
def test_symmetry_composition(q, r, c):
    assert q.then(r).map_cell(c) == r.map_cell(q.map_cell(c))
    assert q.inverse().map_cell(q.map_cell(c)) == c
