"""Numba-compiled kernels; contracts identical to the numpy backend.

All loops run over int64 arrays.  cache=True keeps compiled code on disk so
repeated runs (and worker processes) skip recompilation.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def dilate_histogram(n, caps, memb, bounds):
    C = bounds.shape[0]
    hist = np.zeros(n + 1, dtype=np.int64)
    residual = bounds.copy()
    x = np.zeros(n, dtype=np.int64)
    ub = np.zeros(n, dtype=np.int64)
    nz = 0
    i = 0
    entering = True
    while True:
        if entering:
            cap = caps[i]
            for c in range(C):
                if memb[c, i] and residual[c] < cap:
                    cap = residual[c]
            ub[i] = cap
            if i == n - 1:
                hist[nz] += 1
                hist[nz + 1] += cap
                entering = False
                i -= 1
            else:
                x[i] = 0
                i += 1
        else:
            if i < 0:
                break
            if x[i] < ub[i]:
                x[i] += 1
                if x[i] == 1:
                    nz += 1
                for c in range(C):
                    if memb[c, i]:
                        residual[c] -= 1
                i += 1
                entering = True
            else:
                for c in range(C):
                    if memb[c, i]:
                        residual[c] += x[i]
                if x[i] > 0:
                    nz -= 1
                i -= 1
    return hist


@njit(cache=True)
def _advance(w, n, d):
    """Odometer step over [d]^n in lexicographic order; False when exhausted."""
    i = n - 1
    while i >= 0 and w[i] == d:
        w[i] = 1
        i -= 1
    if i < 0:
        return False
    w[i] += 1
    return True


@njit(cache=True)
def _contains_all(w, n, k):
    for L in range(1, k + 1):
        found = False
        for i in range(n):
            if w[i] == L:
                found = True
                break
        if not found:
            return False
    return True


@njit(cache=True)
def _descents(w, n):
    des = 0
    for i in range(n - 1):
        if w[i] > w[i + 1]:
            des += 1
    return des


@njit(cache=True)
def word_unlucky_histogram(n, d, k):
    hist = np.zeros(n + 1, dtype=np.int64)
    w = np.ones(n, dtype=np.int64)
    occupied = np.zeros(n + 1, dtype=np.bool_)
    while True:
        if _contains_all(w, n, k):
            occupied[:] = False
            unlucky = 0
            for i in range(n):
                p = w[i]
                if p <= n and not occupied[p]:
                    occupied[p] = True
                else:
                    s = n
                    while occupied[s]:
                        s -= 1
                    occupied[s] = True
                    unlucky += 1
            hist[unlucky] += 1
        if not _advance(w, n, d):
            break
    return hist


@njit(cache=True)
def word_descent_histogram(n, d, k):
    hist = np.zeros(n, dtype=np.int64)
    w = np.ones(n, dtype=np.int64)
    while True:
        if _contains_all(w, n, k):
            hist[_descents(w, n)] += 1
        if not _advance(w, n, d):
            break
    return hist


@njit(cache=True)
def word_descent_histogram_tau(n, memb, thresholds):
    V = thresholds.shape[0]
    hist = np.zeros(n, dtype=np.int64)
    w = np.ones(n, dtype=np.int64)
    counts = np.zeros(n, dtype=np.int64)
    while True:
        counts[:] = 0
        for i in range(n):
            counts[w[i] - 1] += 1
        ok = True
        for v in range(V):
            s = 0
            for j in range(n):
                if memb[v, j]:
                    s += counts[j]
            if s < thresholds[v]:
                ok = False
                break
        if ok:
            hist[_descents(w, n)] += 1
        if not _advance(w, n, n):
            break
    return hist
