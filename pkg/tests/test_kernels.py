"""Backend consistency: the numba, numpy and pure-Python kernels must agree
with each other and with direct itertools oracles."""

import subprocess
import sys
from itertools import product

import numpy as np
import pytest

from arborlat import _kernels
from arborlat._kernels import numpyimpl, pyimpl
from arborlat.arbor import enumerate_arbors, octopus
from arborlat.lattice import _kernel_inputs, polytope_Qndk, polytope_of_arbor
from arborlat.parking import park

try:
    from arborlat._kernels import numbaimpl
except ImportError:  # pragma: no cover
    numbaimpl = None

BACKENDS = [pyimpl, numpyimpl] + ([numbaimpl] if numbaimpl else [])


def _as_arrays(caps, memb, bounds):
    return (
        np.asarray(caps, dtype=np.int64),
        np.asarray(memb, dtype=np.int64).reshape(len(bounds), len(caps)),
        np.asarray(bounds, dtype=np.int64),
    )


def _dilate_all_backends(p, m):
    caps, memb, bounds = _kernel_inputs(p, m)
    out = [pyimpl.dilate_histogram(p.n, caps, memb, bounds)]
    arrays = _as_arrays(caps, memb, bounds)
    for mod in BACKENDS[1:]:
        out.append([int(v) for v in mod.dilate_histogram(p.n, *arrays)])
    return out


def _brute_histogram(p, m):
    caps, memb, bounds = _kernel_inputs(p, m)
    hist = [0] * (p.n + 1)
    for x in product(*(range(c + 1) for c in caps)):
        if all(sum(x[i] for i in range(p.n) if row[i]) <= b for row, b in zip(memb, bounds)):
            hist[sum(v > 0 for v in x)] += 1
    return hist


DILATE_CASES = [polytope_Qndk(n, d, k) for n in (1, 2, 3) for d in (1, 2, 3, 4)
                for k in range(min(n, d) + 1)] + \
               [polytope_of_arbor(a) for a in enumerate_arbors(3)]


@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_dilate_backends_agree_with_brute_force(m):
    for p in DILATE_CASES:
        expected = _brute_histogram(p, m)
        for got in _dilate_all_backends(p, m):
            assert got == expected, (p, m)


def test_dilate_larger_cases_consistent():
    for p in [polytope_Qndk(5, 5, 2), polytope_Qndk(4, 6, 3),
              polytope_of_arbor(octopus(5, 3))]:
        for m in (1, 4):
            results = _dilate_all_backends(p, m)
            assert all(r == results[0] for r in results)


def _brute_word_stats(n, d, k):
    unlucky = [0] * (n + 1)
    descent = [0] * n
    for w in product(range(1, d + 1), repeat=n):
        if not all(L in w for L in range(1, k + 1)):
            continue
        unlucky[park(w, d).unlucky_count] += 1
        descent[sum(w[i] > w[i + 1] for i in range(n - 1))] += 1
    return unlucky, descent


WORD_CASES = [(n, d, k) for n in (1, 2, 3, 4) for d in (n, n + 1, n + 2)
              for k in range(min(n, d) + 1)]


@pytest.mark.parametrize("n,d,k", WORD_CASES)
def test_word_kernels_agree_with_parking_oracle(n, d, k):
    unlucky, descent = _brute_word_stats(n, d, k)
    for mod in BACKENDS:
        assert [int(v) for v in mod.word_unlucky_histogram(n, d, k)] == unlucky
        assert [int(v) for v in mod.word_descent_histogram(n, d, k)] == descent


def _tau_inputs(a):
    from arborlat.arbor import descendant_sets

    table = descendant_sets(a)
    memb = [[1 if j + 1 in s else 0 for j in range(a.n)] for s in table.sets]
    thresholds = [len(s) for s in table.sets]
    return memb, thresholds


def test_tau_kernel_agrees_with_word_filter():
    for a in list(enumerate_arbors(3)) + [octopus(4, 2)]:
        n = a.n
        memb, thresholds = _tau_inputs(a)
        expected = [0] * n
        for w in product(range(1, n + 1), repeat=n):
            counts = [sum(1 for L in w if L == j + 1) for j in range(n)]
            if all(sum(c * m for c, m in zip(counts, row)) >= t
                   for row, t in zip(memb, thresholds)):
                expected[sum(w[i] > w[i + 1] for i in range(n - 1))] += 1
        assert pyimpl.word_descent_histogram_tau(n, memb, thresholds) == expected
        memb_a = np.asarray(memb, dtype=np.int64)
        thr_a = np.asarray(thresholds, dtype=np.int64)
        for mod in BACKENDS[1:]:
            got = [int(v) for v in mod.word_descent_histogram_tau(n, memb_a, thr_a)]
            assert got == expected


def test_dispatcher_returns_python_ints():
    caps, memb, bounds = _kernel_inputs(polytope_Qndk(2, 2, 1), 2)
    hist = _kernels.dilate_histogram(2, caps, memb, bounds)
    assert hist == [1, 6, 5]
    assert all(type(v) is int for v in hist)


def test_dispatcher_big_counts_use_exact_path():
    # A segment of length 2^63 overflows int64; the dispatcher must fall back
    # to the big-integer backend and return the exact count.
    big = 1 << 63
    hist = _kernels.dilate_histogram(1, [big], [[1]], [big])
    assert hist == [1, big]


def test_env_flag_selects_numpy_backend():
    code = (
        "from arborlat import _kernels\n"
        "_kernels.word_descent_histogram(2, 2, 0)\n"
        "print(_kernels.backend_name)\n"
    )
    out = subprocess.run(
        [sys.executable, "-c", code],
        env={"ARBORLAT_NUMBA": "0", "PATH": "/usr/bin:/bin"},
        capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "numpy"
