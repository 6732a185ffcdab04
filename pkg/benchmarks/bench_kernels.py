"""Compare the numba and numpy Monte Carlo kernels.

    python benchmarks/bench_kernels.py [--rows 1000000] [--repeat 5]

Prints the best-of-``repeat`` time per kernel and backend, and checks that
both backends agree.  The first numba call (compilation) is excluded.
"""

import argparse
import time

import numpy as np

from contyoung import _kernels, montecarlo as mc


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--rows", type=int, default=1_000_000)
    ap.add_argument("--blocks", type=int, default=6)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    gen = np.random.Generator(np.random.PCG64(12345))
    m = args.blocks - 1
    xs = np.sort(gen.random((args.rows, m)), axis=1)
    ys = np.sort(gen.random((args.rows, m)), axis=1)
    pts = np.sort(gen.random((args.rows, 3)), axis=1)
    a = np.array([1, 2, 3])
    vals = gen.random(args.rows)

    cases = {
        "path_areas": lambda: _kernels.path_areas(xs, ys, 1.0, 1.0),
        "monomial_values": lambda: _kernels.monomial_values(pts, a),
        "moments": lambda: _kernels.moments(vals),
        "mc_vol_z end-to-end": lambda: mc.mc_vol_z(args.blocks, 1.0, 1.0, 1.0, args.rows, 7),
    }
    backends = [b for b in ("numpy", "numba") if b in _kernels._BACKENDS]
    results, outputs = {}, {}
    for b in backends:
        _kernels.use_backend(b)
        for name, fn in cases.items():
            outputs[b, name] = fn()  # warm-up (numba compiles here)
            results[b, name] = best_of(fn, args.repeat)

    print(f"rows={args.rows} blocks={args.blocks} repeat={args.repeat}")
    print(f"{'kernel':<22}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    for name in cases:
        row = f"{name:<22}" + "".join(f"{results[b, name] * 1e3:>10.2f}ms" for b in backends)
        if len(backends) == 2:
            row += f"{results['numpy', name] / results['numba', name]:>9.2f}x"
        print(row)
    if len(backends) == 2:
        for name in cases:
            a_, b_ = outputs["numpy", name], outputs["numba", name]
            if isinstance(a_, mc.Estimate):
                a_, b_ = a_.mean, b_.mean
            a_, b_ = np.asarray(a_, dtype=float), np.asarray(b_, dtype=float)
            ok = np.allclose(a_, b_, rtol=1e-12, atol=0.0)
            print(f"agree[{name}]: {ok}")


if __name__ == "__main__":
    main()
