"""Time the numba kernels against the pure-numpy fallback on training-sized inputs.

Run: python3 benchmarks/bench_kernels.py [--repeats N]
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from astseg.kernels import numba_impl, numpy_impl


def _time(fn, repeats):
    fn()  # warm-up (and JIT compilation)
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def cases(rng):
    x = rng.standard_normal((8, 64, 34, 34)).astype(np.float32)
    cols = numpy_impl.im2col(x, 3, 3, 1)
    xs = rng.standard_normal((8, 32, 66, 66)).astype(np.float32)
    cols_s2 = numpy_impl.im2col(xs, 4, 4, 2)
    src = rng.standard_normal((32, 4, 32, 32)).astype(np.float32)
    grid = rng.uniform(-1.2, 1.2, (32, 64, 64, 2)).astype(np.float32)
    gout = rng.standard_normal((32, 4, 64, 64)).astype(np.float32)
    act = rng.standard_normal((8, 32, 64, 64)).astype(np.float32)
    return {
        "im2col 3x3 s1 [8,64,32,32]": lambda m: m.im2col(x, 3, 3, 1),
        "col2im 3x3 s1 [8,64,32,32]": lambda m: m.col2im(cols, 64, 34, 34, 3, 3, 1),
        "im2col 4x4 s2 [8,32,64,64]": lambda m: m.im2col(xs, 4, 4, 2),
        "col2im 4x4 s2 [8,32,64,64]": lambda m: m.col2im(cols_s2, 32, 66, 66, 4, 4, 2),
        "grid_sample fwd [32,4,32,32]->64x64": lambda m: m.grid_sample_forward(src, grid),
        "grid_sample bwd [32,4,32,32]->64x64": lambda m: m.grid_sample_backward(src, grid, gout),
        "celu [8,32,64,64]": lambda m: m.celu(act),
    }


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args(argv)
    if numba_impl is None:
        print("numba is not importable; nothing to compare")
        return 1
    rng = np.random.default_rng(0)
    print(f"{'kernel':40s} {'numpy ms':>10s} {'numba ms':>10s} {'speedup':>8s}")
    for name, fn in cases(rng).items():
        t_np = _time(lambda: fn(numpy_impl), args.repeats)
        t_nb = _time(lambda: fn(numba_impl), args.repeats)
        print(f"{name:40s} {1e3 * t_np:10.2f} {1e3 * t_nb:10.2f} {t_np / t_nb:8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
