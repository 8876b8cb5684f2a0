import os
import subprocess
import sys

import slablab

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def run_py(code, **env):
    e = dict(os.environ, **env)
    return subprocess.run([sys.executable, "-c", code], env=e, capture_output=True, text=True, check=True).stdout


def test_backend_reported():
    assert slablab.BACKEND in ("compiled", "pure")


def test_forced_fallback_gives_same_results():
    code = ("import slablab; from slablab import Region, count; "
            "print(slablab.BACKEND, count(Region.box(4, 4, 2), 'slab'), count(Region.box(2, 2, 6), 'mixed'))")
    assert run_py(code, SLABLAB_PURE="1") == "pure 165 13\n"
    assert run_py(code).split()[1:] == ["165", "13"]


def test_benchmark_runs():
    out = subprocess.run([sys.executable, os.path.join(ROOT, "benchmarks", "bench_core.py"), "--repeat", "1"],
                         capture_output=True, text=True, check=True).stdout
    assert "4x4x4 slab" in out and "pure" in out
