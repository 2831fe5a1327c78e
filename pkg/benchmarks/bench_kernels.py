#!/usr/bin/env python3
"""Benchmark the compiled kernel against the pure-Python fallback.

Runs the hot operations on identical inputs through both backends,
checks the outputs are bit-identical, and prints timings.

Usage: python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import sys
import time

from islandjohnson import _purecore as pure
from islandjohnson.horton import generate_horton
from islandjohnson.rng import SplitMix64

try:
    from islandjohnson import _fastcore as fast
except ImportError:
    fast = None


def _time(fn, *args, repeat=1):
    best = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def _row(name, pure_s, fast_s):
    speedup = pure_s / fast_s if fast_s else float("inf")
    print(f"{name:<34} pure {pure_s * 1000:9.1f} ms   compiled {fast_s * 1000:9.1f} ms   x{speedup:6.1f}")


def bench(quick: bool) -> int:
    if fast is None:
        print("compiled kernel not available; nothing to compare")
        return 1

    rng = SplitMix64(20260801)
    print(f"{'operation':<34} {'pure':>14}   {'compiled':>18}   speedup")

    # orientation on a batch of random triples
    triples = [tuple(rng.randint(-(1 << 40), 1 << 40) for _ in range(6))
               for _ in range(20_000 if quick else 100_000)]

    def run_orient(mod):
        return [mod.orientation(*t) for t in triples]

    tp, rp = _time(run_orient, pure)
    tf, rf = _time(run_orient, fast)
    assert rp == rf
    _row(f"orientation x{len(triples)}", tp, tf)

    # island enumeration on a random set and a Horton set
    n_rand = 24 if quick else 32
    xs = [rng.randint(-100_000, 100_000) for _ in range(n_rand)]
    ys = [rng.randint(-100_000, 100_000) for _ in range(n_rand)]
    tp, rp = _time(pure.islands_of_size, xs, ys, 4)
    tf, rf = _time(fast.islands_of_size, xs, ys, 4)
    assert rp == rf
    _row(f"islands_of_size(random {n_rand}, k=4)", tp, tf)

    n_h = 32 if quick else 48
    h = generate_horton(n_h)
    hx = [p.x for p in h.ps.points]
    hy = [p.y for p in h.ps.points]
    tp, rp = _time(pure.islands_of_size, hx, hy, 4)
    tf, rf = _time(fast.islands_of_size, hx, hy, 4)
    assert rp == rf
    islands = rf
    _row(f"islands_of_size(horton {n_h}, k=4)", tp, tf)

    # edge building over the islands just enumerated
    tp, rp = _time(pure.overlap_edges, islands, 2)
    tf, rf = _time(fast.overlap_edges, islands, 2)
    assert rp == rf
    _row(f"overlap_edges({len(islands)} islands, l=2)", tp, tf)

    # the high-above predicate at the top recursion level
    n_top = 64 if quick else 128
    top = generate_horton(n_top).ps.points
    even = top[1::2]
    odd = top[0::2]
    ex, ey = [p.x for p in even], [p.y for p in even]
    ox, oy = [p.x for p in odd], [p.y for p in odd]
    tp, rp = _time(pure.high_above, ex, ey, ox, oy)
    tf, rf = _time(fast.high_above, ex, ey, ox, oy)
    assert rp == rf
    _row(f"high_above(horton {n_top} split)", tp, tf)

    print("all outputs identical across backends")
    return 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--quick", action="store_true", help="smaller workloads")
    args = ap.parse_args()
    return bench(args.quick)


if __name__ == "__main__":
    sys.exit(main())
