"""Backend dispatch for the enumeration kernels.

Three interchangeable implementations: numba (default), numpy (selected by
setting ARBORLAT_NUMBA=0, or used automatically if numba is unavailable)
and pure Python.  The Python backend is also chosen automatically whenever
a conservative bound on the counts involved does not fit in int64, keeping
every result exact.  Inputs here are plain Python lists; outputs are lists
of Python ints.
"""

import os

_INT64_SAFE = 1 << 62

_impl = None
backend_name = None


def _flag_off(value):
    return value.strip().lower() in ("0", "false", "no", "off")


def _load():
    global _impl, backend_name
    if _impl is None:
        use_numba = not _flag_off(os.environ.get("ARBORLAT_NUMBA", "1"))
        if use_numba:
            try:
                from . import numbaimpl as mod
                backend_name = "numba"
            except ImportError:
                from . import numpyimpl as mod
                backend_name = "numpy"
        else:
            from . import numpyimpl as mod
            backend_name = "numpy"
        _impl = mod
    return _impl


def _arrays(*seqs):
    import numpy as np

    return [np.asarray(s, dtype=np.int64) for s in seqs]


def dilate_histogram(n, caps, memb, bounds):
    """Lattice points of {x >= 0, x_i <= caps[i], sum_{i in c} x_i <= bounds[c]}
    counted by number of nonzero coordinates."""
    size_bound = 1
    for c in caps:
        size_bound *= c + 1
    if size_bound >= _INT64_SAFE:
        from . import pyimpl

        return pyimpl.dilate_histogram(n, caps, memb, bounds)
    mod = _load()
    caps_a, bounds_a = _arrays(caps, bounds)
    memb_a = _arrays(memb)[0].reshape(len(bounds), n)
    return [int(v) for v in mod.dilate_histogram(n, caps_a, memb_a, bounds_a)]


def word_unlucky_histogram(n, d, k):
    if d ** n >= _INT64_SAFE:
        from . import pyimpl

        return pyimpl.word_unlucky_histogram(n, d, k)
    return [int(v) for v in _load().word_unlucky_histogram(n, d, k)]


def word_descent_histogram(n, d, k):
    if d ** n >= _INT64_SAFE:
        from . import pyimpl

        return pyimpl.word_descent_histogram(n, d, k)
    return [int(v) for v in _load().word_descent_histogram(n, d, k)]


def word_descent_histogram_tau(n, memb, thresholds):
    if n ** n >= _INT64_SAFE:
        from . import pyimpl

        return pyimpl.word_descent_histogram_tau(n, memb, thresholds)
    mod = _load()
    memb_a = _arrays(memb)[0].reshape(len(thresholds), n)
    thr_a = _arrays(thresholds)[0]
    return [int(v) for v in mod.word_descent_histogram_tau(n, memb_a, thr_a)]
