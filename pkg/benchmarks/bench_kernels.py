"""Compare the pure-Python and compiled component-counting kernels.

Run: python benchmarks/bench_kernels.py [--n 60] [--m 200] [--reps 2000]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from hedgegraphs import Hedge, Hedgegraph
from hedgegraphs import _kernels


def random_instance(n: int, m: int, seed: int) -> Hedgegraph:
    rng = np.random.default_rng(seed)
    hedges = []
    for i in range(m):
        hys = []
        for _ in range(rng.integers(1, 4)):
            size = int(rng.integers(2, 6))
            hys.append(tuple(sorted(rng.choice(n, size=size, replace=False))))
        hedges.append(Hedge(f"e{i}", tuple(hys)))
    return Hedgegraph([f"v{i}" for i in range(n)], hedges)


def bench(G: Hedgegraph, kernel: str, reps: int, seed: int) -> float:
    ptr, pu, pv = [0], [], []
    for h in G.hedges:
        for hy in h.hyperedges:
            for a, b in zip(hy, hy[1:]):
                pu.append(a)
                pv.append(b)
        ptr.append(len(pu))
    backend = _kernels.make_backend(ptr, pu, pv, name=kernel)
    rng = np.random.default_rng(seed)
    subsets = [
        sorted(np.flatnonzero(rng.random(G.m) < 0.5).tolist()) for _ in range(reps)
    ]
    start = time.perf_counter()
    acc = 0
    for s in subsets:
        acc += backend.component_count(G.n, s)
    elapsed = time.perf_counter() - start
    print(f"  {kernel:>7}: {elapsed:.4f}s ({reps} subsets, checksum {acc})")
    return elapsed


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=60)
    ap.add_argument("--m", type=int, default=200)
    ap.add_argument("--reps", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    G = random_instance(args.n, args.m, args.seed)
    print(f"instance: n={G.n} m={G.m} p={G.p}")
    t_pure = bench(G, "pure", args.reps, args.seed)
    try:
        t_c = bench(G, "cython", args.reps, args.seed)
        print(f"speedup: {t_pure / t_c:.2f}x")
    except ImportError:
        print("compiled kernel not available; skipping")


if __name__ == "__main__":
    main()
