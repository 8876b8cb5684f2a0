import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slablab.enumerator import enumerate_tilings
from slablab.lattice import Cell, Region
from slablab.tiling import (
    Piece,
    Tiling,
    canonical_decode,
    canonical_encode,
    piece_from_symbol,
    slab_colors_ok,
    slice_vertical_slabs,
    symbol,
    validate,
)


def test_piece_cells():
    assert Piece.domino((0, 0, 0), "y").cells == (Cell(0, 0, 0), Cell(0, 1, 0))
    slab = Piece.slab((1, 1, 1), "x")
    assert sorted(slab.cells) == [Cell(1, 1, 1), Cell(1, 1, 2), Cell(1, 2, 1), Cell(1, 2, 2)]
    assert min(slab.cells) == slab.anchor
    assert Piece.slab((0, 0, 0), "z").is_horizontal
    assert not Piece.domino((0, 0, 0), "z").is_horizontal


def test_validate_examples():
    r = Region.box(2, 2, 1)
    assert validate(Tiling(r, [Piece.slab((0, 0, 0), "z")], "slab")).ok
    bad = validate(Tiling(r, [Piece.domino((0, 0, 0), "x"), Piece.domino((0, 0, 0), "y")], "domino"))
    assert not bad.ok
    assert "(0, 0, 0)" in bad.problems[0]
    wrong_family = Tiling(Region.box(1, 2, 2), [Piece.slab((0, 0, 0), "x")], "mixed")
    assert not validate(wrong_family).ok
    uncovered = Tiling(Region.box(2, 2, 2), [Piece.slab((0, 0, 0), "z")], "slab")
    assert not validate(uncovered).ok
    outside = Tiling(r, [Piece.slab((0, 0, 0), "z"), Piece.domino((5, 5, 5), "x")], "mixed")
    assert not validate(outside).ok


def test_round_trip_2x2x4():
    r = Region.box(2, 2, 4)
    tilings = list(enumerate_tilings(r, "slab"))
    codes = [canonical_encode(t) for t in tilings]
    assert len(set(codes)) == 11
    for t, c in zip(tilings, codes):
        assert canonical_decode(c, r, "slab") == t


def test_cube_codes_distinct():
    codes = {canonical_encode(t) for t in enumerate_tilings(Region.box(2, 2, 2), "slab")}
    assert len(codes) == 3


def test_decode_rejects_garbage():
    r = Region.box(2, 2, 1)
    with pytest.raises(ValueError):
        canonical_decode(b"\x00", r, "slab")
    with pytest.raises(ValueError):
        canonical_decode(bytes([symbol(Piece.slab((0, 0, 0), "z"), Cell(0, 0, 0))] * 4), r, "slab")


@given(
    st.sampled_from(["domino", "slab"]),
    st.integers(0, 2),
    st.tuples(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5)),
)
def test_symbol_round_trip(kind, axis, anchor):
    p = Piece(kind, Cell(*anchor), axis)
    for c in p.cells:
        assert piece_from_symbol(symbol(p, c), c) == p


def test_code_ignores_insertion_order():
    t = next(iter(enumerate_tilings(Region.box(2, 2, 4), "slab")))
    shuffled = Tiling(t.region, list(reversed(sorted(t.pieces))), "slab")
    assert canonical_encode(shuffled) == canonical_encode(t)


def test_json_round_trip(tmp_path, slab666):
    path = tmp_path / "t.json"
    slab666.dump(path)
    assert Tiling.load(path) == slab666
    with pytest.raises(ValueError):
        Tiling.from_json({**slab666.to_json(), "extra": 1})


def test_slicing():
    horizontal = Tiling(Region.box(2, 2, 2), [Piece.slab((0, 0, 0), "z"), Piece.slab((0, 0, 1), "z")], "slab")
    assert slice_vertical_slabs(horizontal).pieces == horizontal.pieces
    single = Tiling(Region.box(2, 1, 2), [Piece.slab((0, 0, 0), "y")], "slab")
    assert slice_vertical_slabs(single).pieces == {Piece.domino((0, 0, 0), "z"), Piece.domino((1, 0, 0), "z")}


def test_sliced_fixture_matches(slab666, mixed666):
    assert slice_vertical_slabs(slab666) == mixed666


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([(2, 2, 4), (4, 4, 2), (2, 4, 3)]), st.data())
def test_slicing_always_valid(dims, data):
    tilings = list(enumerate_tilings(Region.box(*dims), "slab"))
    t = data.draw(st.sampled_from(tilings))
    assert slice_vertical_slabs(t).validate().ok
    assert slab_colors_ok(t)
    assert sum(len(p.cells) for p in t.pieces) == len(t.region)
