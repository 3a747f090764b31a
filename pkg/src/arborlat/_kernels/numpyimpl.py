"""Vectorized numpy kernels.

Frontier expansion for the lattice histogram, chunked base-d decoding for
the word statistics.  All arrays are int64; the dispatcher guarantees the
counts fit.
"""

import numpy as np

# Frontier rows / words handled per vectorized step.
_ROW_LIMIT = 1 << 20
_CHUNK = 1 << 16


def dilate_histogram(n, caps, memb, bounds):
    hist = np.zeros(n + 1, dtype=np.int64)
    # A frontier row is [residual_0..residual_{C-1}, nz]; one seed row.
    seed = np.concatenate([bounds, np.zeros(1, dtype=np.int64)]).reshape(1, -1)
    _expand(0, seed, n, caps, memb, hist)
    return hist


def _row_caps(rows, i, caps, memb):
    cols = np.flatnonzero(memb[:, i])
    if cols.size:
        return np.minimum(caps[i], rows[:, cols].min(axis=1))
    return np.full(rows.shape[0], caps[i], dtype=np.int64)


def _expand(i, rows, n, caps, memb, hist):
    while True:
        cap = _row_caps(rows, i, caps, memb)
        if i == n - 1:
            nz = rows[:, -1]
            np.add.at(hist, nz, 1)
            np.add.at(hist, nz + 1, cap)
            return
        sizes = cap + 1
        total = int(sizes.sum())
        if total > _ROW_LIMIT:
            if rows.shape[0] > 1:
                half = rows.shape[0] // 2
                _expand(i, rows[:half], n, caps, memb, hist)
                rows = rows[half:]
                continue
            # Single row with a huge cap: walk its value range in slices.
            cols = np.flatnonzero(memb[:, i])
            for lo in range(0, total, _ROW_LIMIT):
                vals = np.arange(lo, min(lo + _ROW_LIMIT, total), dtype=np.int64)
                sub = np.repeat(rows, vals.size, axis=0)
                sub[:, cols] -= vals[:, None]
                sub[:, -1] += vals > 0
                _expand(i + 1, sub, n, caps, memb, hist)
            return
        idx = np.repeat(np.arange(rows.shape[0]), sizes)
        starts = np.cumsum(sizes) - sizes
        vals = np.arange(total, dtype=np.int64) - np.repeat(starts, sizes)
        rows = rows[idx]
        cols = np.flatnonzero(memb[:, i])
        rows[:, cols] -= vals[:, None]
        rows[:, -1] += vals > 0
        i += 1


def _decode_words(lo, hi, n, d):
    """Words number lo..hi-1 of [d]^n in lexicographic order, as a matrix."""
    g = np.arange(lo, hi, dtype=np.int64)
    w = np.empty((hi - lo, n), dtype=np.int64)
    for j in range(n - 1, -1, -1):
        w[:, j] = g % d + 1
        g //= d
    return w


def _keep_containing(w, k):
    keep = np.ones(w.shape[0], dtype=bool)
    for L in range(1, k + 1):
        keep &= (w == L).any(axis=1)
    return keep


def _descents(w):
    if w.shape[1] < 2:
        return np.zeros(w.shape[0], dtype=np.int64)
    return (w[:, :-1] > w[:, 1:]).sum(axis=1)


def word_unlucky_histogram(n, d, k):
    hist = np.zeros(n + 1, dtype=np.int64)
    total = d ** n
    for lo in range(0, total, _CHUNK):
        w = _decode_words(lo, min(lo + _CHUNK, total), n, d)
        w = w[_keep_containing(w, k)]
        if not w.shape[0]:
            continue
        W = w.shape[0]
        rows = np.arange(W)
        # Column 0 is a dummy slot for preferences beyond the street.
        occupied = np.zeros((W, n + 1), dtype=bool)
        unlucky = np.zeros(W, dtype=np.int64)
        for i in range(n):
            pref = w[:, i]
            in_range = pref <= n
            slot = np.where(in_range, pref, 0)
            lucky = in_range & ~occupied[rows, slot]
            occupied[rows[lucky], pref[lucky]] = True
            bad = np.flatnonzero(~lucky)
            if bad.size:
                free = ~occupied[bad, 1:]
                spot = n - np.argmax(free[:, ::-1], axis=1)
                occupied[bad, spot] = True
                unlucky[bad] += 1
        hist += np.bincount(unlucky, minlength=n + 1)[: n + 1]
    return hist


def word_descent_histogram(n, d, k):
    hist = np.zeros(n, dtype=np.int64)
    total = d ** n
    for lo in range(0, total, _CHUNK):
        w = _decode_words(lo, min(lo + _CHUNK, total), n, d)
        w = w[_keep_containing(w, k)]
        if w.shape[0]:
            hist += np.bincount(_descents(w), minlength=n)[:n]
    return hist


def word_descent_histogram_tau(n, memb, thresholds):
    hist = np.zeros(n, dtype=np.int64)
    total = n ** n
    for lo in range(0, total, _CHUNK):
        w = _decode_words(lo, min(lo + _CHUNK, total), n, n)
        counts = np.stack([(w == L).sum(axis=1) for L in range(1, n + 1)], axis=1)
        keep = (counts @ memb.T >= thresholds).all(axis=1)
        w = w[keep]
        if w.shape[0]:
            hist += np.bincount(_descents(w), minlength=n)[:n]
    return hist
