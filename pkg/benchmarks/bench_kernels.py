"""Float evaluation throughput: numba kernel vs the numpy fallback.

Run with ``python3 benchmarks/bench_kernels.py``.  Set NSSEQ_DISABLE_NUMBA=1 to
force the fallback everywhere.
"""

import time

import numpy as np

from nsseq import reference as R
from nsseq.kernels import USE_NUMBA, compile_series, eval_grid
from nsseq.sequence import run_sequences


def timed(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    run = run_sequences(R.example_v0(), 1.0, 3, 1e-300, count_groups=False)
    rng = np.random.default_rng(0)
    X = rng.uniform(0, 2, size=(27, 3))
    T = np.geomspace(1e-4, 10, 40)
    print(f"numba available: {USE_NUMBA}")
    print(f"{'field':<8}{'terms':>8}{'numpy s':>10}{'numba s':>10}{'max diff':>11}")
    for name, series in (("v3", run[2].v[0]), ("g2", run[1].g[0]), ("g3", run[2].g[0])):
        c = compile_series(series)
        ref = eval_grid(c, X, T, 0.1, "numpy")
        t_np = timed(lambda: eval_grid(c, X, T, 0.1, "numpy"))
        if USE_NUMBA:
            eval_grid(c, X, T, 0.1, "numba")  # compile
            t_nb = timed(lambda: eval_grid(c, X, T, 0.1, "numba"))
            diff = float(np.abs(eval_grid(c, X, T, 0.1, "numba") - ref).max())
        else:
            t_nb, diff = float("nan"), float("nan")
        print(f"{name:<8}{len(series):>8}{t_np:>10.4f}{t_nb:>10.4f}{diff:>11.2e}")


if __name__ == "__main__":
    main()
