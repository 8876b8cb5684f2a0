"""Kernel selection: the compiled core when importable, the pure-Python one otherwise.

Set ``SLABLAB_PURE=1`` to force the fallback.
"""

import os

from . import _pure

BACKEND = "pure"
_impl = _pure
if os.environ.get("SLABLAB_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _core as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        pass

enumerate_covers = _impl.enumerate_covers
count_covers = _impl.count_covers
flip_neighbors = _impl.flip_neighbors
