"""The parking protocol and word statistics.

Cars 1..n park on spaces 1..n following preference words w in [d]^n: a car
takes its preferred space when that space exists and is free, and otherwise
takes the LARGEST free space, so every car parks.  A car getting its
preference is lucky; unlucky(w) counts the others.

Besides the single-word simulation this module enumerates the word families
(all of [d]^n containing 1..k; words filtered by the descendant-multiplicity
conditions of an arbor), their unlucky and descent generating polynomials,
multiset descent enumerators, and the bounded-map excedance enumerator.

The aggregate enumerators run on the compiled kernels; the word streams
themselves are plain Python generators in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import _kernels
from .arbor import Arbor, InvalidArborError, descendant_sets, validate
from .lattice import weak_compositions
from .polyalg import Poly


@dataclass(frozen=True)
class ParkingOutcome:
    spot: tuple     # space taken by each car, a permutation of 1..n
    lucky: tuple    # one boolean per car

    @property
    def unlucky_count(self) -> int:
        return sum(1 for b in self.lucky if not b)


def park(letters, d=None) -> ParkingOutcome:
    """Simulate the protocol for one preference word.

    d is the preference alphabet size; preferences above the number of
    spaces are treated as unavailable.  Defaults to the larger of n and
    the maximum letter.
    """
    letters = tuple(letters)
    n = len(letters)
    if n == 0:
        return ParkingOutcome((), ())
    if d is None:
        d = max(n, max(letters))
    if any(not 1 <= p <= d for p in letters):
        raise ValueError(f"preferences must lie in 1..{d}, got {letters}")
    occupied = [False] * (n + 1)
    spot = []
    lucky = []
    for p in letters:
        if p <= n and not occupied[p]:
            occupied[p] = True
            spot.append(p)
            lucky.append(True)
        else:
            s = n
            while occupied[s]:
                s -= 1
            occupied[s] = True
            spot.append(s)
            lucky.append(False)
    assert sorted(spot) == list(range(1, n + 1))
    return ParkingOutcome(tuple(spot), tuple(lucky))


def words_W(n: int, d: int, k: int):
    """All words in [d]^n containing each of 1..k, lexicographically."""
    if n < 1 or d < 1 or not 0 <= k <= min(n, d):
        raise ValueError(f"need n,d >= 1 and 0 <= k <= min(n,d), got ({n}, {d}, {k})")
    required = range(1, k + 1)
    for w in product(range(1, d + 1), repeat=n):
        if all(L in w for L in required):
            yield w


def _tau_conditions(a: Arbor):
    ok, msg = validate(a)
    if not ok:
        raise InvalidArborError(msg)
    table = descendant_sets(a)
    return [(frozenset(s), len(s)) for s in table.sets]


def words_Wtau(a: Arbor):
    """Words w in [n]^n such that, for every block v, the letters of D(v)
    appear at least |D(v)| times in w altogether; lexicographic order."""
    conds = _tau_conditions(a)
    n = a.n
    for w in product(range(1, n + 1), repeat=n):
        if all(sum(1 for L in w if L in s) >= size for s, size in conds):
            yield w


def descent_count(w) -> int:
    return sum(1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def descent_enumerator(words, n: int) -> Poly:
    """sum over the stream of t^(n-1-des(w))."""
    counts = [0] * n
    for w in words:
        assert len(w) == n
        counts[n - 1 - descent_count(w)] += 1
    return Poly(counts)


def unlucky_generating_poly(n: int, d: int, k: int) -> Poly:
    """sum over words_W(n,d,k) of t^unlucky(w), via the histogram kernel."""
    if n < 1 or d < 1 or not 0 <= k <= min(n, d):
        raise ValueError(f"need n,d >= 1 and 0 <= k <= min(n,d), got ({n}, {d}, {k})")
    return Poly(_kernels.word_unlucky_histogram(n, d, k))


def descent_enumerator_W(n: int, d: int, k: int) -> Poly:
    """descent_enumerator(words_W(n,d,k), n) computed on the kernel."""
    if n < 1 or d < 1 or not 0 <= k <= min(n, d):
        raise ValueError(f"need n,d >= 1 and 0 <= k <= min(n,d), got ({n}, {d}, {k})")
    hist = _kernels.word_descent_histogram(n, d, k)
    return Poly(hist[n - 1 - j] for j in range(n))


def descent_enumerator_Wtau(a: Arbor) -> Poly:
    """descent_enumerator(words_Wtau(a), n) computed on the kernel."""
    conds = _tau_conditions(a)
    n = a.n
    memb = [[1 if j + 1 in s else 0 for j in range(n)] for s, _ in conds]
    thresholds = [size for _, size in conds]
    hist = _kernels.word_descent_histogram_tau(n, memb, thresholds)
    return Poly(hist[n - 1 - j] for j in range(n))


@dataclass(frozen=True)
class WeakComposition:
    parts: tuple

    def __post_init__(self):
        if any(p < 0 for p in self.parts):
            raise ValueError(f"negative part in {self.parts}")

    @property
    def total(self) -> int:
        return sum(self.parts)


def multiset_permutations(counts):
    """Distinct permutations of the multiset with counts[i] copies of i+1."""
    n = sum(counts)
    counts = list(counts)
    word = []

    def rec():
        if len(word) == n:
            yield tuple(word)
            return
        for L in range(len(counts)):
            if counts[L]:
                counts[L] -= 1
                word.append(L + 1)
                yield from rec()
                word.pop()
                counts[L] += 1

    yield from rec()


def multiset_descent_enumerator(mu) -> Poly:
    """sum of t^des(w) over the distinct permutations of the multiset with
    mu[i] copies of letter i+1."""
    parts = mu.parts if isinstance(mu, WeakComposition) else tuple(mu)
    n = sum(parts)
    counts = [0] * max(n, 1)
    for w in multiset_permutations(parts):
        counts[descent_count(w)] += 1
    return Poly(counts)


def macmahon_descent_enumerator(n: int, k: int) -> Poly:
    """sum of reversed multiset descent enumerators over weak compositions
    (a_1..a_n) of n with a_1..a_k >= 1; these multiset classes partition
    words_W(n,n,k), so the result must equal descent_enumerator_W(n,n,k)."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got ({n}, {k})")
    acc = Poly()
    for a in weak_compositions(n, n):
        if any(a[i] == 0 for i in range(k)):
            continue
        acc = acc + multiset_descent_enumerator(a).reverse(n - 1)
    return acc


@dataclass(frozen=True)
class ExcMap:
    """A map i -> values[i-1] in [2d-1] with values[i-1] <= 2d-n+i-1; its
    excedance statistic counts the values above d."""

    d: int
    values: tuple

    @property
    def exc(self) -> int:
        return sum(1 for v in self.values if v > self.d)


def exc_maps(n: int, d: int):
    """All maps [n] -> [2d-1] with the staircase bound, lexicographically."""
    ranges = [range(1, 2 * d - n + i) for i in range(1, n + 1)]
    for values in product(*ranges):
        yield ExcMap(d, values)


def exc_enumerator(n: int, d: int, k: int) -> Poly:
    """sum of t^exc over the bounded maps whose image contains 1..k.

    The staircase bound is only meaningful for d >= n; smaller d is
    rejected rather than guessed at.
    """
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"need n >= 1 and 0 <= k <= n, got ({n}, {k})")
    if d < n:
        raise ValueError(f"need d >= n, got d={d}, n={n}")
    counts = [0] * (n + 1)
    required = range(1, k + 1)
    for phi in exc_maps(n, d):
        if all(L in phi.values for L in required):
            counts[phi.exc] += 1
    return Poly(counts)
