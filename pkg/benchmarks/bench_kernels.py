"""Time the numpy kernels against their numba-compiled twins.

    python3 benchmarks/bench_kernels.py [--sizes 10 50 200] [--repeat 20]

JIT compile time is reported separately from the warm per-call time.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from dematel import _kernels
from dematel._backend import HAVE_NUMBA


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases(n: int, rng: np.random.Generator):
    x = rng.random((n, n))
    x = x / x.sum(axis=1, keepdims=True) * 0.8
    a = np.eye(n) - x
    scores = rng.integers(0, 5, size=(10, n, n))
    uf, ud = rng.random((2, 10, n, n))
    return {
        "gauss_jordan": ((a, 1e-12), _kernels.gauss_jordan_numpy, _kernels.gauss_jordan_jit),
        "neumann": ((x, 1e-14, 10_000), _kernels.neumann_numpy, _kernels.neumann_jit),
        "perturb": ((scores, uf, ud, 0.3, 1, 0, 4), _kernels.perturb_numpy, _kernels.perturb_jit),
    }


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[5, 10, 30, 100])
    parser.add_argument("--repeat", type=int, default=20)
    args = parser.parse_args(argv)
    if not HAVE_NUMBA:
        print("numba not installed; nothing to compare")
        return 1

    rng = np.random.default_rng(0)
    compiled: set[str] = set()
    print(f"{'kernel':<13} {'n':>4} {'numpy us':>10} {'numba us':>10} {'speedup':>8} {'compile s':>10}")
    for n in args.sizes:
        for name, (call_args, np_fn, jit_fn) in cases(n, rng).items():
            compile_s = ""
            if name not in compiled:
                t0 = time.perf_counter()
                jit_fn(*call_args)
                compile_s = f"{time.perf_counter() - t0:.2f}"
                compiled.add(name)
            t_np = best_of(lambda: np_fn(*call_args), args.repeat)
            t_jit = best_of(lambda: jit_fn(*call_args), args.repeat)
            print(f"{name:<13} {n:>4} {t_np * 1e6:>10.1f} {t_jit * 1e6:>10.1f} {t_np / t_jit:>8.2f} {compile_s:>10}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
