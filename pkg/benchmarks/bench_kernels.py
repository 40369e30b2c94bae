"""Benchmark the compiled recurrence kernel against its pure-Python twin.

Times ``parlett_fill`` (the strict-upper-triangle sweep used by every
principal matrix power) on random upper-triangular inputs, plus the
end-to-end principal power with each backend.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from sectorial_means import _kernels_py
from sectorial_means.linalg import principal_power

try:
    from sectorial_means import _core
except ImportError:
    _core = None


def _random_triangular(n, rng):
    t = np.triu(rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
    t += np.diag(3.0 + rng.uniform(0.0, 2.0, n))
    return np.ascontiguousarray(t)


def _time(fn, args_list, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for args in args_list:
            fn(*args)
        best = min(best, time.perf_counter() - start)
    return best / len(args_list)


def bench_kernel(repeat):
    rng = np.random.default_rng(42)
    print(f"{'n':>4s} {'python':>12s} {'compiled':>12s} {'speedup':>8s}")
    for n in (2, 4, 8, 16, 32):
        batch = []
        for _ in range(max(4, 256 // n)):
            t = _random_triangular(n, rng)
            d = t.diagonal().copy()
            batch.append((t, d**0.5, d))
        t_py = _time(_kernels_py.parlett_fill, batch, repeat)
        if _core is None:
            print(f"{n:4d} {t_py * 1e6:10.2f}us {'n/a':>12s} {'-':>8s}")
            continue
        t_c = _time(_core.parlett_fill, batch, repeat)
        a = _kernels_py.parlett_fill(*batch[0])
        b = _core.parlett_fill(*batch[0])
        # the sweep amplifies rounding by the inverse diagonal gaps, so
        # parity is asserted relative to the result magnitude
        rel = np.abs(a - b).max() / max(1.0, np.abs(a).max())
        assert rel <= 1e-8, f"backends disagree: {rel:.3e}"
        print(
            f"{n:4d} {t_py * 1e6:10.2f}us {t_c * 1e6:10.2f}us {t_py / t_c:7.1f}x"
        )


def bench_power(repeat):
    rng = np.random.default_rng(7)
    print(f"\nend-to-end principal power (Schur + sweep + recompose)")
    print(f"{'n':>4s} {'per call':>12s}")
    for n in (4, 8, 16):
        mats = []
        for _ in range(64):
            z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
            mats.append((z @ z.conj().T + n * np.eye(n), 0.5))
        t = _time(principal_power, mats, repeat)
        print(f"{n:4d} {t * 1e6:10.2f}us")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ns = ap.parse_args()
    if _core is None:
        print("compiled kernel unavailable; timing the Python twin only\n")
    bench_kernel(ns.repeat)
    bench_power(ns.repeat)
