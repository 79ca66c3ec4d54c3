"""Benchmark the oracle's hot kernels: numba JIT vs pure numpy.

Run with ``python3 benchmarks/bench_kernels.py``.  The workload mirrors the
clips verification sweep: batched membership tests of conjugated icosahedral
groups, closure checks, and multiplication tables.
"""

import time

import numpy as np

from isoclips import ICO, OCTA
from isoclips.oracle import random_rotations, realize
from isoclips.oracle.kernels import JIT_KERNELS, PY_KERNELS

TOL = 1e-6


def _workload():
    rng = np.random.default_rng(42)
    A = np.ascontiguousarray(realize(ICO).elements)
    O = np.ascontiguousarray(realize(OCTA).elements)
    frames = random_rotations(400, rng)
    BC = np.ascontiguousarray(np.einsum("fab,nbc,fdc->fnad", frames, A, frames))
    return A, O, BC


def _time(fn, *args, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    A, O, BC = _workload()
    cases = [
        ("membership (60x60)", "membership", (A, A[::2], TOL)),
        ("batch_membership (400 frames, 60x60)", "batch_membership", (A, BC, TOL)),
        ("closure_ok (order 60)", "closure_ok", (A, TOL)),
        ("mult_table (order 24)", "mult_table", (O, TOL)),
    ]
    if JIT_KERNELS is not None:
        # Warm the JIT before timing.
        for _, name, args in cases:
            JIT_KERNELS[name](*args)
    header = f"{'kernel':<40} {'numpy':>10} {'numba':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, name, args in cases:
        t_py = _time(PY_KERNELS[name], *args)
        if JIT_KERNELS is None:
            print(f"{label:<40} {t_py * 1e3:>8.2f}ms {'n/a':>10} {'n/a':>8}")
        else:
            t_jit = _time(JIT_KERNELS[name], *args)
            print(
                f"{label:<40} {t_py * 1e3:>8.2f}ms {t_jit * 1e3:>8.2f}ms "
                f"{t_py / t_jit:>7.1f}x"
            )


if __name__ == "__main__":
    main()
