"""H-descriptions and brute-force lattice-point enumeration.

A polytope here always lives in the nonnegative orthant and is cut out by
unit caps x_i <= 1 and sum constraints over index sets; dilating by m
scales every right-hand side by m.  On top of raw counting this module
derives the h-vector (points of the undilated polytope classified by
number of nonzero coordinates), the Ehrhart polynomial by exact
interpolation, and the h*-polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

from . import _kernels
from .arbor import Arbor, descendant_sets
from .polyalg import (
    HVector,
    Poly,
    VerificationError,
    hstar_from_ehrhart,
    lagrange_interpolate,
)


@dataclass(frozen=True)
class HPolytope:
    """n: ambient dimension; upper_unit: indices i with x_i <= 1 (times the
    dilation); sum_constraints: pairs (indices, bound) meaning the sum over
    the indices is at most the bound (times the dilation).  Indices are
    1-based.  x_i >= 0 is implicit."""

    n: int
    upper_unit: tuple
    sum_constraints: tuple


def polytope_of_arbor(a: Arbor) -> HPolytope:
    """One constraint sum_{i in D(v)} x_i <= |D(v)| per block v."""
    table = descendant_sets(a)  # validates
    cons = tuple(sorted((tuple(sorted(s)), len(s)) for s in table.sets))
    return HPolytope(a.n, (), cons)


def polytope_Qndk(n: int, d: int, k: int) -> HPolytope:
    """x_i <= 1 for i <= k and x_1 + ... + x_n <= d."""
    if n < 1 or d < 1 or not 0 <= k <= min(n, d):
        raise ValueError(f"need n,d >= 1 and 0 <= k <= min(n,d), got ({n}, {d}, {k})")
    return HPolytope(n, tuple(range(1, k + 1)), ((tuple(range(1, n + 1)), d),))


def _kernel_inputs(p: HPolytope, m: int):
    """Scaled per-coordinate caps, membership rows and bounds for the kernels."""
    n = p.n
    bounds = [m * b for _, b in p.sum_constraints]
    memb = [[0] * n for _ in p.sum_constraints]
    caps = [None] * n
    for c, (idxs, b) in enumerate(p.sum_constraints):
        for i in idxs:
            memb[c][i - 1] = 1
            if caps[i - 1] is None or m * b < caps[i - 1]:
                caps[i - 1] = m * b
    for i in p.upper_unit:
        caps[i - 1] = m if caps[i - 1] is None else min(caps[i - 1], m)
    if any(c is None for c in caps):
        raise ValueError("polytope is unbounded: some coordinate is in no constraint")
    return caps, memb, bounds


def _histogram(p: HPolytope, m: int):
    if m < 0:
        raise ValueError("dilation factor must be nonnegative")
    caps, memb, bounds = _kernel_inputs(p, m)
    return _kernels.dilate_histogram(p.n, caps, memb, bounds)


def count_dilate(p: HPolytope, m: int) -> int:
    """Number of integer points in the m-th dilate."""
    return sum(_histogram(p, m))


def h_vector(p: HPolytope) -> HVector:
    """Points of the undilated polytope counted by nonzero coordinates."""
    return HVector(p.n, tuple(_histogram(p, 1)))


def enumerate_points(p: HPolytope, m: int, limit=None):
    """Yield the integer points of the m-th dilate in lexicographic order.

    Stops with an error when more than `limit` points would be produced;
    the CLI wires the ARBORLAT_MAX_POINTS cap through here.
    """
    caps, memb, bounds = _kernel_inputs(p, m)
    n = p.n
    cols = [[c for c in range(len(bounds)) if memb[c][i]] for i in range(n)]
    residual = list(bounds)
    x = [0] * n
    produced = 0

    def rec(i):
        nonlocal produced
        if i == n:
            produced += 1
            if limit is not None and produced > limit:
                raise ValueError(f"point listing exceeds the cap of {limit}")
            yield tuple(x)
            return
        cap = caps[i]
        for c in cols[i]:
            if residual[c] < cap:
                cap = residual[c]
        for v in range(cap + 1):
            x[i] = v
            yield from rec(i + 1)
            for c in cols[i]:
                residual[c] -= 1
        for c in cols[i]:
            residual[c] += cap + 1
        x[i] = 0

    yield from rec(0)


@lru_cache(maxsize=None)
def ehrhart_interpolated(p: HPolytope) -> Poly:
    """Degree-n polynomial through the dilate counts at m = 0..n.

    The count at m = n+1 is recomputed and compared as a verification node;
    a mismatch means the polytope is not full-dimensional.
    """
    n = p.n
    e = lagrange_interpolate([(m, count_dilate(p, m)) for m in range(n + 1)])
    if e.is_zero or e.degree != n or e(n + 1) != count_dilate(p, n + 1):
        raise VerificationError(f"dilate counts of {p} do not fit a degree-{n} polynomial")
    return e


def hstar(p: HPolytope) -> Poly:
    h = hstar_from_ehrhart(ehrhart_interpolated(p), p.n)
    if any(c < 0 for c in h.coeffs):
        raise VerificationError(f"negative h* coefficient for {p}: {h.coeffs}")
    return h


def weak_compositions(total, parts):
    """All tuples of `parts` nonnegative integers summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def composition_ehrhart_oracle(n: int, k: int, m: int) -> int:
    """Sum over weak compositions (a_1..a_n) of n with a_1..a_k >= 1 of
    prod_i C(m+1, a_i); an independent route to the Q_{n,k} dilate count."""
    if not 0 <= k <= n or m < 0:
        raise ValueError(f"need 0 <= k <= n and m >= 0, got ({n}, {k}, {m})")
    total = 0
    for a in weak_compositions(n, n):
        if any(a[i] == 0 for i in range(k)):
            continue
        prod = 1
        for ai in a:
            prod *= comb(m + 1, ai)
            if prod == 0:
                break
        total += prod
    return total


def normalized_volume(p: HPolytope) -> int:
    """n! times the leading Ehrhart coefficient; equals hstar(p)(1)."""
    lead = ehrhart_interpolated(p).coeffs[-1]
    v = factorial(p.n) * lead
    assert v == int(v)
    return int(v)
