"""Enumeration, flips and twist invariants of domino, slab and mixed tilings of 3D regions."""

from ._kernels import BACKEND
from .enumerator import count, enumerate_codes, enumerate_tilings, naive_oracle
from .lattice import CANONICAL_PAIRS, Cell, Color, GoodPair, Region, Symmetry, apply_symmetry, is_good
from .tiling import Piece, Tiling, canonical_decode, canonical_encode, validate
from .transform import TripleTwist, mixed_twist, pair_twist, transform_region, transform_tiling, triple_twist
from .twist import effect, twist

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CANONICAL_PAIRS",
    "Cell",
    "Color",
    "GoodPair",
    "Piece",
    "Region",
    "Symmetry",
    "Tiling",
    "TripleTwist",
    "apply_symmetry",
    "canonical_decode",
    "canonical_encode",
    "count",
    "effect",
    "enumerate_codes",
    "enumerate_tilings",
    "is_good",
    "mixed_twist",
    "naive_oracle",
    "pair_twist",
    "transform_region",
    "transform_tiling",
    "triple_twist",
    "twist",
    "validate",
]
