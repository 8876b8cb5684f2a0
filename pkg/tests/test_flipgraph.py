import json

import pytest

from slablab import fixtures
from slablab.construct import rigid_pattern
from slablab.enumerator import count, enumerate_codes
from slablab.flipgraph import (
    component_of,
    components,
    flip_sites,
    frozen_core_count,
    mixed_flip_moves,
    pieces_inside,
    slab_flip_moves,
)
from slablab.lattice import Region
from slablab.tiling import Piece, Tiling, canonical_decode, canonical_encode
from slablab.verify import L_DISKS


def horizontal_stack(n):
    return Tiling(Region.box(2, 2, n), [Piece.slab((0, 0, z), "z") for z in range(n)], "slab")


def test_slab_moves():
    assert len(slab_flip_moves(horizontal_stack(2))) == 2
    assert len(slab_flip_moves(horizontal_stack(4))) == 6
    assert slab_flip_moves(fixtures.tiling("rigid_6x6x5")) == []


def test_moves_are_involutive():
    t = fixtures.tiling("slab_6x6x6_ttw_002")
    code = canonical_encode(t)
    for _, u in slab_flip_moves(t):
        assert u.validate().ok
        assert code in {canonical_encode(v) for _, v in slab_flip_moves(u)}
    m = fixtures.tiling("mixed_6x6x6_twist_2")
    code = canonical_encode(m)
    for _, u in mixed_flip_moves(m):
        assert code in {canonical_encode(v) for _, v in mixed_flip_moves(u)}


def test_mixed_moves_on_a_cube():
    slabs = Tiling(Region.box(2, 2, 2), [Piece.slab((0, 0, 0), "z"), Piece.slab((0, 0, 1), "z")], "mixed")
    (pieces, verticals), = mixed_flip_moves(slabs)
    assert all(p.kind == "domino" and p.axis == 2 for p in verticals.pieces)
    (_, back), = mixed_flip_moves(verticals)
    assert back == slabs


def test_code_level_moves_match_tiling_level_moves():
    for dims, family in (((4, 4, 2), "slab"), ((4, 4, 2), "mixed"), ((3, 3, 2), "domino")):
        r = Region.box(*dims)
        sites = flip_sites(r, family)
        from slablab._kernels import flip_neighbors
        from slablab.flipgraph import flip_moves

        for code in list(enumerate_codes(r, family))[:60]:
            t = canonical_decode(code, r, family)
            expected = sorted(canonical_encode(u) for _, u in flip_moves(t))
            assert sorted(flip_neighbors(code, sites)) == expected


def test_small_components():
    rep = components(Region.box(2, 2, 4), "slab")
    assert rep.sizes == [11]
    assert rep.components[0].invariant == (0, 0, 0)
    rep = components(Region.box(3, 3, 2), "domino")
    assert rep.total == 229
    assert sorted(rep.sizes) == [1, 1, 227]
    rigid = [c for c in rep.components if c.rigid]
    assert sorted(c.invariant for c in rigid) == [-1, 1]


@pytest.mark.parametrize("n", [2, 3])
def test_four_by_four_is_connected(n):
    rep = components(Region.box(4, 4, n), "slab")
    assert rep.count == 1
    assert rep.total == count(Region.box(4, 4, n), "slab")
    assert all(c.invariant_constant for c in rep.components)


def test_two_floor_disks():
    for d in L_DISKS:
        rep = components(Region.cylinder(d, 2), "slab")
        assert rep.count <= 1


def test_invariants_constant_and_not_merged():
    rep = components(Region.box(4, 4, 6), "mixed", invariants=True)
    assert all(c.invariant_constant for c in rep.components)
    assert sum(rep.sizes) == rep.total == 167341
    values = [c.invariant for c in rep.components]
    assert values.count(2) == 1 and values.count(-2) == 1
    zero = [c for c in rep.components if c.invariant == 0]
    assert len(zero) >= 1


def test_partition_independent_of_seed_order():
    r = Region.box(3, 3, 2)
    a = components(r, "domino").partition()
    b = components(r, "domino", shuffle_seed=11).partition()
    assert a == b


def test_truncation_flag():
    rep = components(Region.box(4, 4, 2), "slab", budget=50)
    assert rep.truncated


def test_component_of():
    c, cut = component_of(fixtures.tiling("rigid_6x6x5"))
    assert c.size == 1 and c.rigid and not cut
    assert c.invariant == (0, 0, 4)
    flat = Tiling(Region.box(4, 4, 2), [Piece.slab((x, y, z), "z") for x in (0, 2) for y in (0, 2) for z in (0, 1)], "slab")
    c, _ = component_of(flat)
    assert c.size == 165


def test_component_of_reference_tiling_holds_both_flips():
    t = fixtures.tiling("slab_6x6x6_ttw_002")
    c, cut = component_of(t, budget=2000, invariants=False)
    assert cut
    cube = {Piece.slab((0, 0, 0), "x"), Piece.slab((1, 0, 0), "x")}
    outcomes = [canonical_encode(u) for pair, u in slab_flip_moves(t) if set(pair) == cube]
    assert len(outcomes) == 2
    assert set(outcomes) <= set(c.codes)


def test_report_exports():
    rep = components(Region.box(2, 2, 4), "slab")
    data = json.loads(rep.dumps())
    assert data["tilings"] == 11 and data["components"] == 1
    dot = rep.to_dot()
    assert dot.startswith("graph flips {") and dot.count(" -- ") > 0
    big = components(Region.box(4, 4, 3), "slab", invariants=False)
    with pytest.raises(ValueError):
        big.to_dot()


def test_frozen_core():
    t = rigid_pattern(3, 1)
    assert frozen_core_count(t, (0, 0, 0), (4, 4, 5)) == 1
    assert frozen_core_count(rigid_pattern(4, 1), (0, 0, 0), (6, 6, 5)) == 1
    flat = Tiling(Region.box(4, 4, 4), [Piece.slab((x, y, z), "z") for x in (0, 2) for y in (0, 2) for z in range(4)], "slab")
    assert pieces_inside(flat, (1, 1, 1), (3, 3, 3)) == []
    assert frozen_core_count(flat, (1, 1, 1), (3, 3, 3)) == 1
    # a core that is not frozen: the inner 2x2x4 column of the flat tiling
    assert frozen_core_count(flat, (0, 0, 0), (4, 4, 4), closed_axes=(0, 1, 2)) == count(Region.box(4, 4, 4), "slab")
