"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_core.py [--repeat 3]
"""
import argparse
import time

from slablab import _pure
from slablab.enumerator import placement_table
from slablab.flipgraph import flip_sites
from slablab.lattice import Region

try:
    from slablab import _core
except ImportError:
    _core = None

CASES = [((4, 4, 4), "slab"), ((4, 4, 2), "domino"), ((4, 4, 6), "mixed")]


def best_of(repeat, fn, *args):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def bench(impl, repeat):
    rows = []
    for dims, family in CASES:
        region = Region.box(*dims)
        table = placement_table(region, family)
        args = (table.n_cells, table.cells, table.by_anchor)
        t_count, n = best_of(repeat, impl.count_covers, *args)
        t_enum, covers = best_of(repeat, lambda: sum(1 for _ in impl.enumerate_covers(*args)))
        assert n == covers
        codes = list(table.codes(limit=2000))
        sites = flip_sites(region, family)
        t_flip, _ = best_of(repeat, lambda: [impl.flip_neighbors(c, sites) for c in codes])
        rows.append((f"{'x'.join(map(str, dims))} {family}", n, t_count, t_enum, t_flip))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    impls = [("pure", _pure)] + ([("compiled", _core)] if _core else [])
    results = {name: bench(impl, args.repeat) for name, impl in impls}
    print(f"{'case':<16}{'tilings':>9}  {'kernel':<9}{'count':>9}{'enumerate':>11}{'flips(2k)':>11}")
    for i, (dims, _) in enumerate(CASES):
        for name, _ in impls:
            case, n, tc, te, tf = results[name][i]
            print(f"{case:<16}{n:>9}  {name:<9}{tc:>8.3f}s{te:>10.3f}s{tf:>10.3f}s")
    if _core:
        for i, (dims, _) in enumerate(CASES):
            p, c = results["pure"][i], results["compiled"][i]
            print(f"speedup {p[0]}: count {p[2] / c[2]:.1f}x  enumerate {p[3] / c[3]:.1f}x  flips {p[4] / c[4]:.1f}x")
    else:
        print("compiled core not built; only the fallback was timed")


if __name__ == "__main__":
    main()
