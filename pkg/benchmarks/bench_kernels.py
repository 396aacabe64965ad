"""Compiled vs pure-Python kernels on identical inputs.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each case runs the rotation branch and bound to completion (no incumbent,
unreachable target) so both backends visit the same nodes; the outputs
are compared before timings are printed.
"""

import argparse
import math
import random
import time

from surfskew import _kernels_py
from surfskew.cli import label
from surfskew.graph import Complete, CompleteBipartite, Cube, Circulant, generate, girth
from surfskew.search import _bfs_order, _Darts, _rotation_options

try:
    from surfskew import _kernels
except ImportError:  # fallback-only install
    _kernels = None

BB_CASES = [Complete(5), CompleteBipartite(3, 4), Circulant(8, [1, 2]), Cube(3), CompleteBipartite(4, 4)]
FACE_CASES = [Cube(7), Complete(40)]


def bb_args(spec):
    g = generate(spec)
    t = _Darts(g)
    order = _bfs_order(g)
    starts, counts, flat = _rotation_options(t, order, True)
    gi = girth(g)
    L = int(gi) if gi != math.inf else 1
    return (order, starts, counts, flat, t.out_offset, t.out_darts, t.rev, L, -1, 10**9, 10**9)


def timed(fn, repeat):
    best = math.inf
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - start)
    return best, out


def row(name, work, tp, tc):
    speed = f"{tp / tc:8.1f}x" if tc else "       -"
    tcs = f"{tc * 1e3:13.2f}" if tc else "            -"
    print(f"{name:<22}{work:>12}{tp * 1e3:12.2f}{tcs}{speed}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'case':<22}{'work':>12}{'pure ms':>12}{'compiled ms':>13}{'speedup':>9}")
    for spec in BB_CASES:
        a = bb_args(spec)
        out_p = [-1] * len(a[6])
        tp, rp = timed(lambda: _kernels_py.bb_max_faces(*a, out_p), args.repeat)
        tc = None
        if _kernels is not None:
            out_c = [-1] * len(a[6])
            tc, rc = timed(lambda: _kernels.bb_max_faces(*a, out_c), args.repeat)
            assert rp == rc and out_p == out_c, f"backends disagree on {spec}"
        row(f"bb {label(spec)}", f"{rp[1]} nodes", tp, tc)
    rng = random.Random(0)
    for spec in FACE_CASES:
        g = generate(spec)
        t = _Darts(g)
        succ = [-1] * t.n
        for v in range(g.p):
            outs = list(t.out(v))
            rng.shuffle(outs)
            for i, d in enumerate(outs):
                succ[d] = outs[(i + 1) % len(outs)]
        tp, fp = timed(lambda: _kernels_py.face_count(succ, t.rev), args.repeat)
        tc = None
        if _kernels is not None:
            tc, fc = timed(lambda: _kernels.face_count(succ, t.rev), args.repeat)
            assert fp == fc
        row(f"faces {label(spec)}", f"{t.n} darts", tp, tc)


if __name__ == "__main__":
    main()
