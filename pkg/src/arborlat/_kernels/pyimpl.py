"""Pure-Python reference kernels.

Same contracts as the numba and numpy backends, but over native big
integers, so these never overflow.  The dispatcher routes here
automatically when a conservative size bound does not fit in int64.
Inputs are plain lists here, arrays in the other backends.
"""

from itertools import product


def dilate_histogram(n, caps, memb, bounds):
    """Histogram, by number of nonzero coordinates, of the integer points
    satisfying x_i >= 0, x_i <= caps[i] and, for each constraint c,
    sum over i with memb[c][i] of x_i <= bounds[c].
    """
    C = len(bounds)
    hist = [0] * (n + 1)
    residual = list(bounds)
    cols = [[c for c in range(C) if memb[c][i]] for i in range(n)]

    def rec(i, nz):
        cap = caps[i]
        for c in cols[i]:
            if residual[c] < cap:
                cap = residual[c]
        if i == n - 1:
            # Aggregate the last coordinate: one zero choice, cap nonzero ones.
            hist[nz] += 1
            hist[nz + 1] += cap
            return
        rec(i + 1, nz)
        for _ in range(cap):
            for c in cols[i]:
                residual[c] -= 1
            rec(i + 1, nz + 1)
        for c in cols[i]:
            residual[c] += cap

    rec(0, 0)
    return hist


def _unlucky(w, n):
    """Unlucky-car count of the parking protocol: preferred space if free and
    in range, otherwise the largest free space."""
    occupied = [False] * (n + 1)
    unlucky = 0
    for p in w:
        if p <= n and not occupied[p]:
            occupied[p] = True
        else:
            s = n
            while occupied[s]:
                s -= 1
            occupied[s] = True
            unlucky += 1
    return unlucky


def word_unlucky_histogram(n, d, k):
    """Histogram of the unlucky statistic over words in [d]^n containing 1..k."""
    hist = [0] * (n + 1)
    required = range(1, k + 1)
    for w in product(range(1, d + 1), repeat=n):
        if all(L in w for L in required):
            hist[_unlucky(w, n)] += 1
    return hist


def word_descent_histogram(n, d, k):
    """Histogram of descent counts over words in [d]^n containing 1..k."""
    hist = [0] * n
    required = range(1, k + 1)
    for w in product(range(1, d + 1), repeat=n):
        if all(L in w for L in required):
            des = sum(w[i] > w[i + 1] for i in range(n - 1))
            hist[des] += 1
    return hist


def word_descent_histogram_tau(n, memb, thresholds):
    """Histogram of descent counts over words in [n]^n whose letter
    multiplicities satisfy, for each row v, sum over letters L with
    memb[v][L-1] of count(L) >= thresholds[v]."""
    hist = [0] * n
    V = len(thresholds)
    for w in product(range(1, n + 1), repeat=n):
        counts = [0] * n
        for L in w:
            counts[L - 1] += 1
        ok = True
        for v in range(V):
            row = memb[v]
            if sum(counts[j] for j in range(n) if row[j]) < thresholds[v]:
                ok = False
                break
        if ok:
            des = sum(w[i] > w[i + 1] for i in range(n - 1))
            hist[des] += 1
    return hist
