#!/usr/bin/env python3
"""Benchmark the jitted kernels against the pure-numpy fallback.

Times the hot paths on sweep-sized workloads: channel construction for a
501x501 aperture and the two-node quadrature double sum at order 200.

    python benchmarks/bench_kernels.py [--repeats N]
"""

import argparse
import math
import time

import numpy as np

from nfpls import _backend
from nfpls.geometry import ArrayGeometry, NodeGeometry


def _timeit(fn, repeats):
    best = math.inf
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    side = 0.125 / math.sqrt(4.0 * math.pi)
    arr = ArrayGeometry(501, 501, 0.0625, side, 0.125)
    node = NodeGeometry(10.0, math.pi / 3, 2 * math.pi / 3)
    mxv, mzv = arr.index_vectors()
    chan_args = (2, mxv, mzv, node.range_r, node.cos_x, node.cos_y, node.cos_z,
                 arr.spacing_d, arr.wavelength, arr.element_area)

    order = 200
    t = np.arange(1, order + 1, dtype=float)
    zeta = np.cos((2.0 * t - 1.0) * math.pi / (2.0 * order))
    weights = np.sqrt(1.0 - zeta ** 2)
    quad_args = (zeta, weights, 0.157, 0.157, 0.433, -0.5, 0.433, -0.5, 0.5,
                 502.65, 1005.3, 0.75)

    workloads = [
        ("channel_entries 501x501 (non-uniform)", "channel_entries", chan_args),
        ("quad_double_sum T=200", "quad_double_sum", quad_args),
    ]

    print(f"{'workload':42s} {'numpy':>10s} {'numba':>10s} {'speedup':>8s}")
    for label, fn_name, call_args in workloads:
        timings = {}
        for backend in _backend.available():
            impl = getattr(_backend.implementation(backend), fn_name)
            impl(*call_args)  # warm up (jit compile / cache load)
            timings[backend] = _timeit(lambda: impl(*call_args), args.repeats)
        ratio = timings["numpy"] / timings["numba"]
        print(f"{label:42s} {timings['numpy'] * 1e3:8.2f} ms "
              f"{timings['numba'] * 1e3:8.2f} ms {ratio:7.2f}x")

    ref = _backend.implementation("numpy").channel_entries(*chan_args)
    jit = _backend.implementation("numba").channel_entries(*chan_args)
    print(f"max |numpy - numba| on channel entries: "
          f"{np.max(np.abs(ref - jit)):.3e}")


if __name__ == "__main__":
    main()
