"""Compare the compiled float kernels with the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Micro-benchmarks call both kernel modules directly; the end-to-end run
times the chord search on the k=5 construction once per backend in a
fresh interpreter, switching with CKPIERCE_PURE_PYTHON.
"""
import argparse
import os
import random
import subprocess
import sys
import timeit

import numpy as np

from ckpierce import _kernels_py
from ckpierce.family import Family, scale_to_unit_disk
from ckpierce.geometry import convex_hull
from ckpierce.kkm import FloatFamily, chord_system, region_planes

try:
    from ckpierce import _kernels
except ImportError:
    _kernels = None

END_TO_END = """
import time
from ckpierce.construction import build_construction
from ckpierce.kkm import find_piercing_lines
from ckpierce.kernels import BACKEND
f = build_construction(5)
t = time.perf_counter()
for _ in range(5):
    find_piercing_lines(f, 5)
print(BACKEND, (time.perf_counter() - t) / 5)
"""


def random_float_family(size: int, seed: int) -> FloatFamily:
    rng = random.Random(seed)
    bodies = []
    for _ in range(size):
        cx, cy = rng.randint(-100, 100), rng.randint(-100, 100)
        bodies.append(convex_hull([(cx + rng.randint(-9, 9), cy + rng.randint(-9, 9))
                                   for _ in range(rng.randint(1, 5))]))
    return FloatFamily(scale_to_unit_disk(Family(tuple(bodies)))[0])


def bench(label: str, fn, repeat: int) -> float:
    per_call = min(timeit.repeat(fn, number=repeat, repeat=3)) / repeat
    print(f"  {label:<10} {per_call * 1e6:10.2f} us/call")
    return per_call


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=2000)
    args = ap.parse_args()
    if _kernels is None:
        print("compiled kernels are not built; only the fallback is available")
    cs = chord_system(np.random.default_rng(0).dirichlet(np.ones(6)), 5)
    planes = region_planes(cs, 4)
    for size in (12, 100, 1000):
        ff = random_float_family(size, size)
        reps = max(10, args.repeat * 12 // size)
        for name, call in (
            ("segment_distances", lambda m: m.segment_distances(ff.verts, ff.offsets, cs.chords)),
            ("region_members", lambda m: m.region_members(ff.verts, ff.offsets, planes)),
        ):
            print(f"{name}, {size} members")
            slow = bench("numpy", lambda: call(_kernels_py), reps)
            if _kernels is not None:
                fast = bench("cython", lambda: call(_kernels), reps)
                print(f"  speedup    {slow / fast:10.1f}x")
    print("find_piercing_lines on the k=5 construction (mean of 5 runs)")
    for pure in ("0", "1"):
        env = dict(os.environ, CKPIERCE_PURE_PYTHON=pure)
        out = subprocess.run([sys.executable, "-c", END_TO_END], env=env,
                             capture_output=True, text=True, check=True).stdout.split()
        print(f"  {out[0]:<10} {float(out[1]):10.3f} s")


if __name__ == "__main__":
    main()
