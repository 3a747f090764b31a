"""Time the enumeration kernels on each available backend.

The library dispatches to one backend per process (numba by default, numpy
with ARBORLAT_NUMBA=0, pure Python for counts past int64); this script calls
all three implementations directly on identical inputs and prints a timing
table, so the dispatch default can be sanity-checked on the current machine.

Run from the repository root:

    python3 benchmarks/bench_backends.py
    python3 benchmarks/bench_backends.py --repeats 5 --heavy
"""

import argparse
import time

import numpy as np

from arborlat._kernels import pyimpl, numpyimpl
from arborlat.arbor import octopus
from arborlat.lattice import _kernel_inputs, polytope_Qndk, polytope_of_arbor
from arborlat.parking import _tau_conditions

try:
    from arborlat._kernels import numbaimpl
except ImportError:
    numbaimpl = None


def _dilate_args(polytope, m):
    n = polytope.n
    caps, memb, bounds = _kernel_inputs(polytope, m)
    lists = (n, caps, memb, bounds)
    arrays = (n, np.asarray(caps, dtype=np.int64),
              np.asarray(memb, dtype=np.int64).reshape(len(bounds), n),
              np.asarray(bounds, dtype=np.int64))
    return lists, arrays


def _tau_args(a):
    conds = _tau_conditions(a)
    n = a.n
    memb = [[1 if j + 1 in s else 0 for j in range(n)] for s, _ in conds]
    thresholds = [size for _, size in conds]
    lists = (n, memb, thresholds)
    arrays = (n, np.asarray(memb, dtype=np.int64),
              np.asarray(thresholds, dtype=np.int64))
    return lists, arrays


def cases(heavy):
    oct63 = octopus(6, 3)
    yield "dilate octopus(6,3) m=3", "dilate_histogram", _dilate_args(polytope_of_arbor(oct63), 3)
    yield "dilate Q(7,7,3) m=2", "dilate_histogram", _dilate_args(polytope_Qndk(7, 7, 3), 2)
    same = lambda args: (args, args)  # word kernels take scalars on every backend
    yield "unlucky words (6,6,3)", "word_unlucky_histogram", same((6, 6, 3))
    yield "descents words (6,8,4)", "word_descent_histogram", same((6, 8, 4))
    yield "descents W_tau octopus(6,3)", "word_descent_histogram_tau", _tau_args(oct63)
    if heavy:
        yield "dilate Q(8,8,4) m=3", "dilate_histogram", _dilate_args(polytope_Qndk(8, 8, 4), 3)
        yield "unlucky words (7,7,3)", "word_unlucky_histogram", same((7, 7, 3))
        yield "descents W_tau octopus(7,3)", "word_descent_histogram_tau", _tau_args(octopus(7, 3))


def best_of(fn, args, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeats", type=int, default=3, help="keep the best of this many runs")
    ap.add_argument("--heavy", action="store_true", help="add larger cases (tens of seconds in pure Python)")
    args = ap.parse_args()

    backends = [("python", pyimpl, 0), ("numpy", numpyimpl, 1)]
    if numbaimpl is not None:
        backends.append(("numba", numbaimpl, 1))
    else:
        print("numba unavailable; timing python and numpy only")

    if numbaimpl is not None:
        # first call per kernel pays the JIT compile; do it before timing
        for _, kernel, (lists, arrays) in cases(heavy=False):
            getattr(numbaimpl, kernel)(*arrays)

    rows = []
    for label, kernel, (lists, arrays) in cases(args.heavy):
        timings = {}
        reference = None
        for name, mod, use_arrays in backends:
            call_args = arrays if use_arrays else lists
            result = [int(v) for v in getattr(mod, kernel)(*call_args)]
            if reference is None:
                reference = result
            elif result != reference:
                raise SystemExit(f"backend disagreement on {label}: {name} gave {result}, expected {reference}")
            timings[name] = best_of(getattr(mod, kernel), call_args, args.repeats)
        rows.append((label, timings))

    names = [name for name, _, _ in backends]
    print(f"{'case':<30}" + "".join(f"{name:>12}" for name in names) + f"{'py/best':>10}")
    for label, timings in rows:
        fastest = min(timings.values())
        line = f"{label:<30}" + "".join(f"{timings[name]:>11.4f}s" for name in names)
        print(line + f"{timings['python'] / fastest:>9.1f}x")


if __name__ == "__main__":
    main()
