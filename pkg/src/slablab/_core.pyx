# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for exhaustive search.  Mirrors ``slablab._pure``."""

from libc.stdint cimport uint64_t, UINT64_MAX
from libc.stdlib cimport malloc, free
from libc.string cimport memset
from libcpp.unordered_map cimport unordered_map
from libcpp.utility cimport pair
from cython.operator cimport dereference as deref, preincrement as inc

from . import _pure


def enumerate_covers(int n_cells, placements, by_anchor, long limit=-1):
    cdef int n_pl = len(placements)
    cdef int i, j, k, pid, c, top, lvl, nopts, ok, cur
    cdef long emitted = 0
    if n_cells == 0:
        yield ()
        return
    # flattened placement cells
    cdef int *pl_start = <int *> malloc((n_pl + 1) * sizeof(int))
    cdef int total = 0
    for pid in range(n_pl):
        pl_start[pid] = total
        total += len(placements[pid])
    pl_start[n_pl] = total
    cdef int *pl_cells = <int *> malloc((total + 1) * sizeof(int))
    for pid in range(n_pl):
        j = pl_start[pid]
        for c in placements[pid]:
            pl_cells[j] = c
            j += 1
    cdef int *opt_start = <int *> malloc((n_cells + 1) * sizeof(int))
    total = 0
    for i in range(n_cells):
        opt_start[i] = total
        total += len(by_anchor[i])
    opt_start[n_cells] = total
    cdef int *opts = <int *> malloc((total + 1) * sizeof(int))
    for i in range(n_cells):
        j = opt_start[i]
        for pid in by_anchor[i]:
            opts[j] = pid
            j += 1
    cdef char *covered = <char *> malloc(n_cells + 1)
    memset(covered, 0, n_cells + 1)
    covered[n_cells] = 1  # sentinel
    cdef int *st_anchor = <int *> malloc((n_cells + 1) * sizeof(int))
    cdef int *st_k = <int *> malloc((n_cells + 1) * sizeof(int))
    cdef int ncovered = 0
    try:
        lvl = 0
        cur = 0
        k = opt_start[0]
        while True:
            # find a fitting option at anchor ``cur`` starting from k
            while k < opt_start[cur + 1]:
                pid = opts[k]
                ok = 1
                for j in range(pl_start[pid], pl_start[pid + 1]):
                    if covered[pl_cells[j]]:
                        ok = 0
                        break
                if ok:
                    break
                k += 1
            if k < opt_start[cur + 1]:
                pid = opts[k]
                for j in range(pl_start[pid], pl_start[pid + 1]):
                    covered[pl_cells[j]] = 1
                ncovered += pl_start[pid + 1] - pl_start[pid]
                st_anchor[lvl] = cur
                st_k[lvl] = k
                lvl += 1
                if ncovered == n_cells:
                    yield tuple([opts[st_k[i]] for i in range(lvl)])
                    emitted += 1
                    if emitted == limit:
                        return
                    lvl -= 1
                    pid = opts[st_k[lvl]]
                    for j in range(pl_start[pid], pl_start[pid + 1]):
                        covered[pl_cells[j]] = 0
                    ncovered -= pl_start[pid + 1] - pl_start[pid]
                    cur = st_anchor[lvl]
                    k = st_k[lvl] + 1
                    continue
                while covered[cur]:
                    cur += 1
                k = opt_start[cur]
            else:
                if lvl == 0:
                    return
                lvl -= 1
                pid = opts[st_k[lvl]]
                for j in range(pl_start[pid], pl_start[pid + 1]):
                    covered[pl_cells[j]] = 0
                ncovered -= pl_start[pid + 1] - pl_start[pid]
                cur = st_anchor[lvl]
                k = st_k[lvl] + 1
    finally:
        free(pl_start)
        free(pl_cells)
        free(opt_start)
        free(opts)
        free(covered)
        free(st_anchor)
        free(st_k)


def count_covers(int n_cells, placements, by_anchor):
    """Window DP in 64-bit state/count words; defers to the pure kernel when the
    window is wider than 64 cells or a count would overflow."""
    cdef int i, c, width = 0
    for i in range(n_cells):
        for pid in by_anchor[i]:
            for c in placements[pid]:
                if c - i + 1 > width:
                    width = c - i + 1
    if width > 64:
        return _pure.count_covers(n_cells, placements, by_anchor)
    rel_py = _pure.relative_masks(n_cells, placements, by_anchor)
    cdef unordered_map[uint64_t, uint64_t] cur_map, nxt_map
    cdef unordered_map[uint64_t, uint64_t].iterator it
    cdef uint64_t s, t, m, cnt
    cdef int nrel, r
    cdef uint64_t *rel = <uint64_t *> malloc(32 * sizeof(uint64_t))
    cur_map[0] = 1
    try:
        for i in range(n_cells):
            nrel = len(rel_py[i])
            if nrel > 32:
                return _pure.count_covers(n_cells, placements, by_anchor)
            for r in range(nrel):
                rel[r] = rel_py[i][r]
            nxt_map.clear()
            it = cur_map.begin()
            while it != cur_map.end():
                s = deref(it).first
                cnt = deref(it).second
                if s & 1:
                    t = s >> 1
                    if nxt_map[t] > UINT64_MAX - cnt:
                        return _pure.count_covers(n_cells, placements, by_anchor)
                    nxt_map[t] += cnt
                else:
                    for r in range(nrel):
                        m = rel[r]
                        if not (m & s):
                            t = (s | m) >> 1
                            if nxt_map[t] > UINT64_MAX - cnt:
                                return _pure.count_covers(n_cells, placements, by_anchor)
                            nxt_map[t] += cnt
                inc(it)
            cur_map.swap(nxt_map)
            if cur_map.size() == 0:
                return 0
        it = cur_map.find(0)
        if it == cur_map.end():
            return 0
        return int(deref(it).second)
    finally:
        free(rel)


def flip_neighbors(bytes code, sites):
    cdef const unsigned char *src = code
    cdef int n = len(code)
    cdef int j, m, match, f, g, nf
    cdef bytearray new
    out = []
    for idx, fillings in sites:
        m = len(idx)
        nf = len(fillings)
        match = -1
        for f in range(nf):
            pat = <bytes> fillings[f]
            for j in range(m):
                if src[<int> idx[j]] != (<const unsigned char *> pat)[j]:
                    break
            else:
                match = f
                break
        if match < 0:
            continue
        for g in range(nf):
            if g == match:
                continue
            pat = <bytes> fillings[g]
            new = bytearray(code)
            for j in range(m):
                new[<int> idx[j]] = (<const unsigned char *> pat)[j]
            out.append(bytes(new))
    return out
