"""Time the numba kernels against their pure-numpy fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each kernel is called once on both paths before timing (so numba's
compilation or cache load is excluded), the outputs are compared, and the
best of ``--repeat`` wall-clock runs is reported.
"""

from __future__ import annotations

import argparse
import math
import time

import numpy as np

from semiphoton_lab import _accel, kernels


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def cases():
    rng = np.random.default_rng(0)
    n = 1_000_000
    y = rng.normal(size=n + 1)
    t = rng.uniform(0, 10, size=n)
    ys = rng.uniform(0, 10, size=n)
    a = rng.normal(size=(n, 3))
    b = rng.normal(size=(n, 3))
    return {
        "simpson_samples (1e6 intervals)": lambda nb: kernels.simpson_samples(y, 1e-3, use_numba=nb),
        "simpson_cosine (1e6 intervals)": lambda nb: kernels.simpson_cosine(1.0, 1.0, 0.0, 2 * math.pi, n,
                                                                            use_numba=nb),
        "simpson_cosine (1e4 intervals)": lambda nb: kernels.simpson_cosine(1.0, 1.0, 0.0, 2 * math.pi, 10_000,
                                                                            use_numba=nb),
        "trig_fields (1e6 points)": lambda nb: kernels.trig_fields(1.0, 2.0, 2.0, -1.0, t, ys, use_numba=nb),
        "cross_rows (1e6 rows)": lambda nb: kernels.cross_rows(a, b, use_numba=nb),
    }


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)

    if not _accel.NUMBA_ENABLED:
        print("numba unavailable or disabled; only the numpy path can be timed")
    print(f"{'kernel':34s} {'numpy [ms]':>11s} {'numba [ms]':>11s} {'speed-up':>9s}")
    for name, fn in cases().items():
        ref = np.asarray(fn(False))
        t_np = best_of(lambda: fn(False), args.repeat)
        if _accel.NUMBA_ENABLED:
            out = np.asarray(fn(True))
            assert np.allclose(out, ref, rtol=1e-12, atol=1e-9), name
            t_nb = best_of(lambda: fn(True), args.repeat)
            print(f"{name:34s} {t_np * 1e3:11.3f} {t_nb * 1e3:11.3f} {t_np / t_nb:8.1f}x")
        else:
            print(f"{name:34s} {t_np * 1e3:11.3f} {'-':>11s} {'-':>9s}")


if __name__ == "__main__":
    main()
