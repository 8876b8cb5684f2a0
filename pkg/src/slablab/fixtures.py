"""Reference tilings shipped with the package."""

from __future__ import annotations

from importlib import resources

from .lattice import Region, load_region
from .tiling import Tiling

TILINGS = {
    "domino_3x3x2_twist_minus1": "domino tiling of 3x3x2 with twist -1 (no flips)",
    "slab_6x6x6_ttw_002": "slab tiling of 6x6x6 with triple twist (0, 0, 2)",
    "mixed_6x6x6_twist_2": "the previous tiling with vertical slabs cut into z-dominoes",
    "rigid_6x6x5": "flip-free slab tiling of 6x6x5, Tw_z = +4",
    "rigid_8x8x5": "flip-free slab tiling of 8x8x5, Tw_z = +12",
    "mixed_4x4x6_twist_plus2": "one of the two mixed tilings of 4x4x6 with nonzero twist",
    "mixed_4x4x6_twist_minus2": "the other one",
    "odd_cylinder_tiling": "slab tiling of a 48-cell z-cylinder with Tw_z = -1",
}
REGIONS = {
    "odd_cylinder_region": "z-cylinder whose slab tilings all have odd Tw_z",
}


def path(name: str):
    return resources.files(__package__).joinpath("data").joinpath(f"{name}.json")


def tiling(name: str) -> Tiling:
    if name not in TILINGS:
        raise KeyError(f"unknown fixture {name!r}; known: {sorted(TILINGS)}")
    with resources.as_file(path(name)) as p:
        return Tiling.load(p)


def region(name: str) -> Region:
    if name not in REGIONS:
        raise KeyError(f"unknown region fixture {name!r}; known: {sorted(REGIONS)}")
    with resources.as_file(path(name)) as p:
        return load_region(p)
