"""Closed-form polynomials for the octopus polytopes Q_{n,k} and their
generalization Q_{n,d,k}: Ehrhart polynomials, the f-polynomials whose
coefficients give the magic decomposition, and two independent formulas
for the h-polynomial (lattice points by nonzero-coordinate count).

All products prod (a t + b) are expanded by exact convolution.
"""

from fractions import Fraction
from math import comb, factorial

from .polyalg import GammaVector, MagicVector, ONE, Poly, T


def _check_nk(n, k):
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"need n >= 1 and 0 <= k <= n, got ({n}, {k})")


def _check_ndk(n, d, k):
    if n < 1 or d < 1 or not 0 <= k <= min(n, d):
        raise ValueError(f"need n,d >= 1 and 0 <= k <= min(n,d), got ({n}, {d}, {k})")


def _linear_product(pairs) -> Poly:
    """prod over (a, b) of (a t + b)."""
    acc = ONE
    for a, b in pairs:
        acc = acc * Poly([b, a])
    return acc


def ehrhart_Qnk(n: int, k: int) -> Poly:
    """(1/n!) sum_j (-1)^j C(k,j) prod_{i<n} ((n-j)t + n-j-i)."""
    _check_nk(n, k)
    acc = Poly()
    for j in range(k + 1):
        term = _linear_product((n - j, n - j - i) for i in range(n))
        acc = acc + (-1) ** j * comb(k, j) * term
    return acc * Fraction(1, factorial(n))


def ehrhart_Qndk(n: int, d: int, k: int) -> Poly:
    """sum_j (-1)^j C(k,j) C((d-j)t + n-j, n), the binomial expanded as
    prod_{i<n} ((d-j)t + n-j-i) / n!."""
    _check_ndk(n, d, k)
    acc = Poly()
    for j in range(k + 1):
        term = _linear_product((d - j, n - j - i) for i in range(n))
        acc = acc + (-1) ** j * comb(k, j) * term
    return acc * Fraction(1, factorial(n))


def f_poly(n: int, k: int) -> Poly:
    """sum_j (-1)^j C(k,j) prod_{i<n} (it + n-j-i)."""
    _check_nk(n, k)
    acc = Poly()
    for j in range(k + 1):
        term = _linear_product((i, n - j - i) for i in range(n))
        acc = acc + (-1) ** j * comb(k, j) * term
    return acc


def f_poly_general(n: int, d: int, k: int) -> Poly:
    """sum_j (-1)^j C(k,j) prod_{i<n} ((d-n+i)t + n-j-i); equals f_poly at d = n."""
    _check_ndk(n, d, k)
    acc = Poly()
    for j in range(k + 1):
        term = _linear_product((d - n + i, n - j - i) for i in range(n))
        acc = acc + (-1) ** j * comb(k, j) * term
    return acc


def magic_vector_Qndk(n: int, d: int, k: int) -> MagicVector:
    """The coefficients of f_poly_general, read as the magic vector of
    n! Ehr(Q_{n,d,k})."""
    f = f_poly_general(n, d, k)
    return MagicVector(n, tuple(f.coeff(i) for i in range(n + 1)))


def magic_identity_check(n: int, d: int, k: int) -> bool:
    """n! Ehr(Q_{n,d,k}) = sum_i c_i t^i (1+t)^(n-i) with c = f_poly_general
    coefficients; an exact identity, so False means an implementation bug."""
    lhs = ehrhart_Qndk(n, d, k) * factorial(n)
    return lhs == magic_vector_Qndk(n, d, k).to_poly()


def gamma_vector_Qnk(n: int, k: int) -> GammaVector:
    """gamma_i = C(n-k, i) C(n-i, i)."""
    _check_nk(n, k)
    return GammaVector(n, tuple(comb(n - k, i) * comb(n - i, i) for i in range(n // 2 + 1)))


def h_poly_Qnk(n: int, k: int) -> Poly:
    """sum_i C(n-k,i) C(n-i,i) t^i (1+t)^(n-2i), expanded."""
    _check_nk(n, k)
    acc = Poly()
    for i, g in enumerate(gamma_vector_Qnk(n, k).gammas):
        if g:
            acc = acc + g * (T ** i * (ONE + T) ** (n - 2 * i))
    return acc


def _c(n, k):
    return comb(n, k) if 0 <= k <= n else 0


def h_poly_Qnk_lemma(n: int, k: int) -> Poly:
    """Independent route to h_poly_Qnk: the reversed polynomial t^n h(1/t)
    has t^j coefficient sum_i C(n-k,i) C(k,j-i) C(n-k+j-i, j)."""
    _check_nk(n, k)
    rev = [
        sum(_c(n - k, i) * _c(k, j - i) * _c(n - k + j - i, j) for i in range(n - k + 1))
        for j in range(n + 1)
    ]
    return Poly(reversed(rev))


def covering_words_count(n: int, d: int, k: int) -> int:
    """Number of words in [d]^n containing each of 1..k at least once:
    sum_j (-1)^j C(k,j) (d-j)^n."""
    _check_ndk(n, d, k)
    return sum((-1) ** j * comb(k, j) * (d - j) ** n for j in range(k + 1))
