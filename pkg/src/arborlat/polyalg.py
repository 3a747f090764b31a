"""Exact univariate polynomial arithmetic and certificates.

Everything in this module is computed over arbitrary-precision integers and
rationals (`fractions.Fraction`); there is no floating point anywhere.  The
module provides the polynomial type shared by the rest of the package, the
two special basis decompositions (gamma and magic), shape predicates
(palindromic, unimodal), exact Sturm-sequence root localization, the
Macaulay M-sequence growth test, Lagrange interpolation and the
Ehrhart-to-h* coefficient transform.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, inf
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


class VerificationError(RuntimeError):
    """An internal exact identity that must hold by theorem failed to hold."""


def _norm(c) -> Scalar:
    """Normalize a coefficient: integral fractions become ints, floats are rejected."""
    if isinstance(c, bool):
        raise TypeError("bool is not a polynomial coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    raise TypeError(f"exact coefficient required, got {type(c).__name__}")


class Poly:
    """A univariate polynomial with exact coefficients, ascending degree order.

    The zero polynomial is canonically the empty coefficient tuple and has no
    degree.  Coefficients are Python ints or reduced Fractions; mixed input is
    normalized (a Fraction with denominator 1 is stored as an int).

    >>> Poly([2, 5, 3])
    Poly('3t^2+5t+2')
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- basic queries ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Scalar:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def coeff(self, i: int) -> Scalar:
        """Coefficient of t^i (0 beyond the stored length)."""
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    # -- arithmetic -------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __sub__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1) if self.coeffs and other.coeffs else []
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Poly:
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        """Exact rational division: self = q*other + r with deg r < deg other."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        q = []
        rem = list(self.coeffs)
        d = len(other.coeffs) - 1
        lead = other.coeffs[-1]
        while len(rem) - 1 >= d and rem:
            c = Fraction(rem[-1], 1) / lead
            q.append(c)
            shift = len(rem) - 1 - d
            for i, b in enumerate(other.coeffs):
                rem[shift + i] -= c * b
            rem.pop()
        q.reverse()
        return Poly(q), Poly(rem)

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def __call__(self, x):
        """Evaluate at x (exact; x may be int, Fraction or Poly)."""
        acc = self.coeffs[-1] if self.coeffs else 0
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    # -- structural helpers ----------------------------------------------

    def derivative(self) -> Poly:
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def compose(self, inner: Poly) -> Poly:
        """self(inner), exact."""
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly([c])
        return acc

    def reverse(self, n: int) -> Poly:
        """Coefficient reversal within degree n: t^n * self(1/t)."""
        if self.coeffs and self.degree > n:
            raise ValueError("degree exceeds reversal bound")
        return Poly(self.coeff(n - i) for i in range(n + 1))

    def scaled_to_integer(self) -> Poly:
        """Multiply by the lcm of coefficient denominators; error if already integral input desired."""
        m = 1
        for c in self.coeffs:
            if isinstance(c, Fraction):
                m = m * c.denominator // _gcd(m, c.denominator)
        return self * m

    def __repr__(self) -> str:
        return f"Poly('{format_poly(self)}')"


ZERO = Poly()
ONE = Poly([1])
T = Poly([0, 1])


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def format_poly(p: Poly) -> str:
    """Render descending, e.g. '2t^2+11t+6'; fractional coefficients as '(a/b)'."""
    if p.is_zero:
        return "0"
    parts = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = -c if c < 0 else c
        if isinstance(mag, Fraction):
            body = f"({mag})"
        else:
            body = str(mag)
        if i > 0:
            var = "t" if i == 1 else f"t^{i}"
            term = var if mag == 1 else f"{body}{var}"
        else:
            term = body
        parts.append(sign + term)
    return "".join(parts)


def poly_to_json(p: Poly) -> list:
    """Ascending coefficient array; all-string 'num/den' form if any coefficient is fractional."""
    if p.is_integral:
        return list(p.coeffs)
    return [str(Fraction(c)) for c in p.coeffs]


def poly_from_json(coeffs: Sequence) -> Poly:
    return Poly(Fraction(c) if isinstance(c, str) else c for c in coeffs)


# ---------------------------------------------------------------------------
# Gamma / magic decompositions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GammaVector:
    """Coefficients g_i of p(t) = sum g_i t^i (1+t)^(n-2i) for palindromic p of degree n."""

    n: int
    gammas: tuple

    def to_poly(self) -> Poly:
        acc = ZERO
        for i, g in enumerate(self.gammas):
            if g:
                acc = acc + g * (T ** i * (ONE + T) ** (self.n - 2 * i))
        return acc

    @property
    def is_nonnegative(self) -> bool:
        return all(g >= 0 for g in self.gammas)


@dataclass(frozen=True)
class MagicVector:
    """Coefficients c_i of p(t) = sum c_i t^i (1+t)^(n-i)."""

    n: int
    cs: tuple

    def to_poly(self) -> Poly:
        acc = ZERO
        for i, c in enumerate(self.cs):
            if c:
                acc = acc + c * (T ** i * (ONE + T) ** (self.n - i))
        return acc

    @property
    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.cs)


@dataclass(frozen=True)
class HVector:
    """Lattice points of a polytope counted by number of nonzero coordinates."""

    n: int
    hs: tuple

    def to_poly(self) -> Poly:
        return Poly(self.hs)

    @property
    def total(self) -> int:
        return sum(self.hs)


def to_magic_basis(p: Poly, n: int) -> MagicVector:
    """Expand p in the basis t^i (1+t)^(n-i), 0 <= i <= n.

    Uses the closed form c(u) = sum_i p_i u^i (1-u)^(n-i), i.e. the
    coefficient vector is (1-u)^n * p(u/(1-u)) read as a polynomial in u.
    """
    if not p.is_zero and p.degree > n:
        raise ValueError(f"basis size n={n} is smaller than deg p={p.degree}")
    one_minus = Poly([1, -1])
    acc = ZERO
    for i, c in enumerate(p.coeffs):
        if c:
            acc = acc + c * (T ** i * one_minus ** (n - i))
    return MagicVector(n, tuple(acc.coeff(i) for i in range(n + 1)))


def from_magic_basis(mv: MagicVector) -> Poly:
    """Inverse of to_magic_basis: sum c_i t^i (1+t)^(n-i)."""
    return mv.to_poly()


def is_palindromic(p: Poly, n: int) -> bool:
    """True iff the coefficient of t^i equals that of t^(n-i) for 0 <= i <= n."""
    if not p.is_zero and p.degree > n:
        return False
    return all(p.coeff(i) == p.coeff(n - i) for i in range(n // 2 + 1))


def to_gamma_basis(p: Poly, n: int) -> GammaVector:
    """Expand a degree-n palindromic polynomial as sum g_i t^i (1+t)^(n-2i).

    Computed by peeling: g_i is the t^i coefficient of the residual after the
    lower-index basis elements are subtracted.  Raises on non-palindromic
    input, where no such expansion exists.
    """
    if not is_palindromic(p, n):
        raise ValueError("polynomial is not palindromic with respect to the given degree")
    residual = p
    gammas = []
    for i in range(n // 2 + 1):
        g = residual.coeff(i)
        gammas.append(g)
        if g:
            residual = residual - g * (T ** i * (ONE + T) ** (n - 2 * i))
    if not residual.is_zero:
        raise VerificationError("gamma peeling left a nonzero residual on palindromic input")
    return GammaVector(n, tuple(gammas))


def is_unimodal(v: Sequence) -> bool:
    """True iff the sequence weakly rises and then weakly falls."""
    v = list(v)
    i = 0
    while i + 1 < len(v) and v[i] <= v[i + 1]:
        i += 1
    while i + 1 < len(v) and v[i] >= v[i + 1]:
        i += 1
    return i >= len(v) - 1


# ---------------------------------------------------------------------------
# Sturm-sequence root localization
# ---------------------------------------------------------------------------

def _primitive(p: Poly) -> Poly:
    """Scale by a positive rational to integer coefficients with content 1."""
    if p.is_zero:
        return p
    m = 1
    for c in p.coeffs:
        if isinstance(c, Fraction):
            m = m * c.denominator // _gcd(m, c.denominator)
    ints = [int(c * m) for c in p.coeffs]
    g = 0
    for c in ints:
        g = _gcd(g, c)
    return Poly(c // g for c in ints)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Primitive gcd with positive leading coefficient (exact)."""
    a, b = _primitive(a), _primitive(b)
    while not b.is_zero:
        a, b = b, _primitive(a % b)
    if a.is_zero:
        return a
    return a if a.lead > 0 else -a


def squarefree_part(p: Poly) -> Poly:
    """p with repeated roots stripped: p / gcd(p, p')."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    p = _primitive(p)
    g = poly_gcd(p, p.derivative())
    if g.is_zero or g.degree == 0:
        return p
    q, r = divmod(p, g)
    if not r.is_zero:
        raise VerificationError("gcd did not divide its argument")
    return _primitive(q)


def _sturm_chain(p: Poly) -> list[Poly]:
    # Content is stripped after every remainder step to bound coefficient growth;
    # scaling by positive constants preserves the sign-change count.
    chain = [p]
    d = p.derivative()
    if d.is_zero:
        return chain
    chain.append(_primitive(d))
    while chain[-1].degree > 0:
        r = chain[-2] % chain[-1]
        if r.is_zero:
            break
        chain.append(_primitive(-r))
    return chain


def _as_bound(x, side: str):
    """Normalize an interval endpoint: None means unbounded on that side."""
    if x is None:
        return None
    if isinstance(x, float):
        if x == inf and side == "hi":
            return None
        if x == -inf and side == "lo":
            return None
        raise TypeError("interval endpoints must be exact rationals or +/-infinity")
    return _norm(Fraction(x) if not isinstance(x, (int, Fraction)) else x)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _sign_changes(chain: list[Poly], x, side: str) -> int:
    if x is None:
        # Limit signs: leading coefficient, with degree parity at -infinity.
        if side == "lo":
            signs = [_sign(q.lead) * (-1) ** q.degree for q in chain]
        else:
            signs = [_sign(q.lead) for q in chain]
    else:
        signs = [_sign(q(x)) for q in chain]
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_real_root_count(p: Poly, lo=None, hi=None) -> int:
    """Number of distinct real roots of p in the half-open interval (lo, hi].

    lo=None / hi=None mean unbounded.  Multiplicities are ignored: the count
    is taken on the squarefree part.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    lo = _as_bound(lo, "lo")
    hi = _as_bound(hi, "hi")
    if lo is not None and hi is not None and lo > hi:
        raise ValueError("empty interval: lo > hi")
    q = squarefree_part(p)
    if q.degree == 0:
        return 0
    chain = _sturm_chain(q)
    return _sign_changes(chain, lo, "lo") - _sign_changes(chain, hi, "hi")


def all_roots_real_in(p: Poly, lo=None, hi=None) -> bool:
    """True iff every root of p is real and lies in the closed interval [lo, hi].

    Decided on the squarefree part, so repeated real roots pass.  A constant
    nonzero polynomial has no roots and passes vacuously.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    q = squarefree_part(p)
    if q.degree == 0:
        return True
    lo_b = _as_bound(lo, "lo")
    count = sturm_real_root_count(q, lo, hi)
    if lo_b is not None and q(lo_b) == 0:
        count += 1
    return count == q.degree


# ---------------------------------------------------------------------------
# Macaulay growth test
# ---------------------------------------------------------------------------

def macaulay_bound(a: int, i: int) -> int:
    """a^<i>: the Macaulay upper bound for the next entry after a in position i.

    Uses the greedy i-binomial representation a = C(m_i,i)+C(m_{i-1},i-1)+...
    and returns C(m_i+1,i+1)+C(m_{i-1}+1,i)+...
    """
    if i < 1:
        raise ValueError("position must be >= 1")
    if a < 0:
        raise ValueError("entry must be nonnegative")
    total = 0
    rem = a
    j = i
    while rem > 0:
        m = j
        while comb(m + 1, j) <= rem:
            m += 1
        rem -= comb(m, j)
        total += comb(m + 1, j + 1)
        j -= 1
    return total


def m_sequence_check(g: Sequence[int]) -> bool:
    """True iff g is an M-sequence: g_0 = 1 and g_{i+1} <= g_i^<i> for all i >= 1.

    A zero entry forces every later entry to be zero (its bound is zero).
    """
    g = list(g)
    if not g or g[0] != 1:
        return False
    if any(x < 0 for x in g):
        return False
    for i in range(1, len(g) - 1):
        if g[i + 1] > macaulay_bound(g[i], i):
            return False
    return True


# ---------------------------------------------------------------------------
# Interpolation and the h* transform
# ---------------------------------------------------------------------------

def lagrange_interpolate(points: Sequence[tuple]) -> Poly:
    """The unique polynomial of degree < len(points) through the given points, exact."""
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate abscissae")
    acc = ZERO
    for i, (_, y) in enumerate(points):
        if y == 0:
            continue
        basis = ONE
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * Poly([-xj, 1])
                denom *= xs[i] - xj
        acc = acc + basis * (Fraction(y) / denom)
    return acc


def hstar_from_ehrhart(e: Poly, n: int | None = None) -> Poly:
    """Coefficients of the numerator of sum_m e(m) t^m over (1-t)^(n+1).

    h*_i = sum_{j=0}^{i} (-1)^j C(n+1, j) e(i-j).  Requires e to take
    nonnegative integer values at 0..n and have degree exactly n; a
    non-integer output signals an invalid Ehrhart input.
    """
    if e.is_zero:
        raise ValueError("zero polynomial is not an Ehrhart polynomial")
    if n is None:
        n = e.degree
    if e.degree != n:
        raise ValueError(f"degree {e.degree} does not match dimension {n}")
    vals = []
    for m in range(n + 1):
        v = e(m)
        if isinstance(v, Fraction):
            if v.denominator != 1:
                raise ValueError(f"e({m}) = {v} is not an integer")
            v = int(v)
        if v < 0:
            raise ValueError(f"e({m}) = {v} is negative")
        vals.append(v)
    hs = []
    for i in range(n + 1):
        hs.append(sum((-1) ** j * comb(n + 1, j) * vals[i - j] for j in range(i + 1)))
    return Poly(hs)
