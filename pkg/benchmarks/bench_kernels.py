#!/usr/bin/env python3
"""Time the compiled kernels against the pure NumPy/Python fallback.

Run from the repo root after an editable install:

    python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from esnbench import _kernels_py
from esnbench.reservoir import build_reservoir
from esnbench.rng import new_source
from esnbench.transfer import coefficient_array, taylor

try:
    from esnbench import _core
except ImportError:
    _core = None


def _time(fn, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_drive(backend, n, t, kind):
    src = new_source(1)
    res = build_reservoir("scr", n, 0.9, 0.2,
                          src.derive_stream("m"), src.derive_stream("w"))
    u = src.derive_stream("u").uniform(-0.5, 0.5, size=t)
    is_tanh = kind == "tanh"
    coeffs = np.empty(0) if is_tanh else coefficient_array(taylor(2))
    x0 = np.zeros(n)
    return _time(lambda: backend.drive_kernel(res.omega, res.input_weights, u,
                                              is_tanh, coeffs, 1e3, x0.copy()))


def bench_mg(backend, units):
    return _time(lambda: backend.mg_kernel(units * 10, 0.1, 170, 0.2, 0.1, 10.0, 1.2))


def main():
    backends = [("python", _kernels_py)]
    if _core is not None:
        backends.insert(0, ("compiled", _core))
    rows = []
    for name, impl in backends:
        for n, t, kind in [(50, 2000, "tanh"), (50, 2000, "taylor"),
                           (500, 2000, "tanh")]:
            rows.append((f"drive N={n} T={t} {kind}", name,
                         bench_drive(impl, n, t, kind)))
        rows.append(("mg 3000 units", name, bench_mg(impl, 3000)))
    width = max(len(r[0]) for r in rows)
    print(f"{'kernel':<{width}}  {'backend':<9} {'best (s)':>10}")
    for label, name, seconds in rows:
        print(f"{label:<{width}}  {name:<9} {seconds:>10.4f}")
    if _core is not None:
        print("\nspeedup (python / compiled):")
        compiled = {r[0]: r[2] for r in rows if r[1] == "compiled"}
        python = {r[0]: r[2] for r in rows if r[1] == "python"}
        for label in compiled:
            print(f"  {label:<{width}}  {python[label] / compiled[label]:6.1f}x")


if __name__ == "__main__":
    main()
