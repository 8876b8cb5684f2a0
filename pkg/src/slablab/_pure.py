"""Pure-Python kernels.  Same signatures as the compiled ``_core`` module."""

from __future__ import annotations


def enumerate_covers(n_cells, placements, by_anchor, limit=-1):
    """Yield exact covers of cells ``0..n_cells-1`` as tuples of placement ids.

    ``placements[p]`` lists the cell indices of placement ``p``;
    ``by_anchor[i]`` lists, in trial order, the placements whose lowest cell is ``i``.
    """
    if n_cells == 0:
        yield ()
        return
    masks = []
    for cells in placements:
        m = 0
        for c in cells:
            m |= 1 << c
        masks.append(m)
    full = (1 << n_cells) - 1
    mask = 0
    chosen = []
    stack = []
    opts = by_anchor[0]
    k = 0
    emitted = 0
    while True:
        nopts = len(opts)
        while k < nopts and masks[opts[k]] & mask:
            k += 1
        if k < nopts:
            pid = opts[k]
            mask |= masks[pid]
            chosen.append(pid)
            stack.append((opts, k))
            if mask == full:
                yield tuple(chosen)
                emitted += 1
                if emitted == limit:
                    return
                mask ^= masks[chosen.pop()]
                opts, k = stack.pop()
                k += 1
                continue
            free = ~mask & (mask + 1)
            opts = by_anchor[free.bit_length() - 1]
            k = 0
        else:
            if not stack:
                return
            mask ^= masks[chosen.pop()]
            opts, k = stack.pop()
            k += 1


def relative_masks(n_cells, placements, by_anchor):
    """Placement masks relative to their anchor cell, per anchor."""
    rel = []
    for i in range(n_cells):
        row = []
        for pid in by_anchor[i]:
            m = 0
            for c in placements[pid]:
                m |= 1 << (c - i)
            row.append(m)
        rel.append(row)
    return rel


def count_covers(n_cells, placements, by_anchor):
    """Number of exact covers, by a sweep over cells with a sliding occupancy window."""
    rel = relative_masks(n_cells, placements, by_anchor)
    states = {0: 1}
    for i in range(n_cells):
        nxt = {}
        options = rel[i]
        for s, cnt in states.items():
            if s & 1:
                t = s >> 1
                nxt[t] = nxt.get(t, 0) + cnt
                continue
            for m in options:
                if not m & s:
                    t = (s | m) >> 1
                    nxt[t] = nxt.get(t, 0) + cnt
        states = nxt
        if not states:
            return 0
    return states.get(0, 0)


def flip_neighbors(code, sites):
    """Codes reachable by one local move.

    ``sites`` is a list of ``(cell_indices, fillings)``; each filling is a bytes
    pattern for those cells.  A site whose current symbols equal one filling
    yields one neighbour per other filling.
    """
    out = []
    for idx, fillings in sites:
        current = bytes(code[i] for i in idx)
        if current not in fillings:
            continue
        for f in fillings:
            if f == current:
                continue
            new = bytearray(code)
            for i, s in zip(idx, f):
                new[i] = s
            out.append(bytes(new))
    return out
