#!/usr/bin/env python3
"""Time the numba-compiled kernels against the pure-numpy fallbacks.

Run directly: ``python benchmarks/bench_backends.py [--scale N]``.
The workloads are sized so the numpy path finishes in seconds; pass a larger
--scale to stress the compiled path.
"""

import argparse
import time

import numpy as np

from pbwtidx import _kernels


def _compiled():
    if _kernels.compiled_impls is not None:
        return _kernels.compiled_impls
    try:
        import numba
    except ImportError:
        return None
    jit = numba.njit(cache=True)
    return {name: jit(fn) for name, fn in _kernels._LOOP_IMPLS.items()}


def _best_of(fn, args, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        started = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - started)
    return best


def _workloads(scale):
    rng = np.random.default_rng(0)
    sigma = 4

    n, width = 2000 * scale, 250
    codes = rng.integers(0, sigma, (n, width), dtype=np.uint8)
    seed = np.arange(n, dtype=np.int32)
    yield "radix_sweep", f"{n} strings x {width}", (codes, seed, sigma)

    cols = np.ascontiguousarray(codes.T)
    yield "occ_tables", f"{width} cols x {n}", (cols, sigma)

    table = _kernels.radix_sweep_numpy(codes, seed, sigma)
    pbwt_cols = np.ascontiguousarray(
        codes[table[1:], np.arange(width, dtype=np.intp)[:, None]], dtype=np.uint8)
    occ = _kernels.occ_tables_numpy(pbwt_cols, sigma)
    c_arrays = np.zeros((width, sigma), np.int64)
    for j in range(width):
        freq = np.bincount(codes[:, j], minlength=sigma)
        c_arrays[j, 1:] = np.cumsum(freq[:-1])
    rows = np.arange(n, dtype=np.int64)
    yield "locate_walk", f"{n} rows x {width} cols", (rows, width, 0, pbwt_cols, c_arrays, occ)

    size = 4096 * scale
    text = rng.integers(1, sigma + 1, size, dtype=np.uint8)
    term = np.concatenate([text, np.zeros(1, np.uint8)])
    rot = term[(np.arange(size + 1)[:, None] + np.arange(size + 1)[None, :]) % (size + 1)]
    rot = np.ascontiguousarray(rot, dtype=np.uint8)
    order = _kernels.radix_sweep_numpy(rot, np.arange(size + 1, dtype=np.int32), sigma + 1)
    order = _kernels.radix_sweep_numpy(rot, order[0], sigma + 1)[0]
    bwt = rot[order, size]
    bwt_occ = _kernels.occ_tables_numpy(bwt[None, :], sigma + 1)[0]
    freq = np.bincount(bwt, minlength=sigma + 1)
    c_array = np.zeros(sigma + 1, np.int64)
    c_array[1:] = np.cumsum(freq[:-1])
    stride = 16
    sampled = np.full(size + 1, -1, np.int64)
    for row, p in enumerate(order):
        if p % stride == 0:
            sampled[row] = p
    walk_rows = rng.integers(0, size + 1, 2048, dtype=np.int64)
    yield "lf_walk", f"2048 rows, stride {stride}", (walk_rows, bwt, c_array, bwt_occ, sampled)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--scale", type=int, default=1)
    args = parser.parse_args()

    compiled = _compiled()
    if compiled is None:
        print("numba is not importable; timing the numpy fallbacks only")

    print(f"{'kernel':<14} {'workload':<24} {'numpy':>10} {'numba':>10} {'speedup':>8}")
    for name, desc, kernel_args in _workloads(args.scale):
        numpy_time = _best_of(_kernels._NUMPY_IMPLS[name], kernel_args)
        if compiled is None:
            print(f"{name:<14} {desc:<24} {numpy_time * 1e3:>8.1f}ms {'-':>10} {'-':>8}")
            continue
        compiled[name](*kernel_args)  # trigger JIT outside the timing
        numba_time = _best_of(compiled[name], kernel_args)
        print(f"{name:<14} {desc:<24} {numpy_time * 1e3:>8.1f}ms "
              f"{numba_time * 1e3:>8.1f}ms {numpy_time / numba_time:>7.1f}x")


if __name__ == "__main__":
    main()
