"""Verification drivers: run the proved identities and the open conjectures
over parameter grids and exhaustively enumerated arbors.

Checks return Report values (pure data, JSON-serializable); nothing here
prints.  Identity checks failing means a bug; conjecture checks failing is
a potential counterexample and the report preserves the full payload.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import factorial
from multiprocessing import Pool

from .arbor import Arbor, enumerate_arbors, is_linear
from .closedform import ehrhart_Qnk
from .lattice import ehrhart_interpolated, h_vector, hstar, polytope_Qndk, polytope_of_arbor
from .parking import descent_enumerator_W, descent_enumerator_Wtau
from .polyalg import (
    all_roots_real_in,
    hstar_from_ehrhart,
    is_palindromic,
    m_sequence_check,
    poly_to_json,
    sturm_real_root_count,
    to_gamma_basis,
)

SIZE_CAPS = {"hstar": 5, "hvector": 6, "roots": 6}


@dataclass(frozen=True)
class Report:
    check: str
    params: dict
    passed: bool
    lhs: object = None
    rhs: object = None
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "params": self.params,
            "pass": self.passed,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "detail": self.detail,
        }


def _arbor_params(a: Arbor) -> dict:
    return {"n": a.n, "blocks": [list(b) for b in a.blocks], "parent": list(a.parent)}


def check_theorem_hstar(n: int, k: int, include_interp=None) -> Report:
    """Descent enumerator over the covering words against the closed-form h*;
    optionally (default for n <= 4) also against the interpolated h*."""
    lhs = descent_enumerator_W(n, n, k)
    rhs = hstar_from_ehrhart(ehrhart_Qnk(n, k), n)
    if include_interp is None:
        include_interp = n <= 4
    pieces = [f"descents={poly_to_json(lhs)}", f"closed={poly_to_json(rhs)}"]
    ok = lhs == rhs
    if include_interp:
        interp = hstar(polytope_Qndk(n, n, k))
        pieces.append(f"interp={poly_to_json(interp)}")
        ok = ok and lhs == interp
    return Report(
        "theorem_hstar", {"n": n, "k": k}, ok,
        poly_to_json(lhs), poly_to_json(rhs), "; ".join(pieces),
    )


def check_conjecture_hstar(a: Arbor) -> Report:
    """h* of the arbor polytope against the descent enumerator over the
    multiplicity-filtered words."""
    lhs = hstar(polytope_of_arbor(a))
    rhs = descent_enumerator_Wtau(a)
    return Report(
        "conjecture_hstar", _arbor_params(a), lhs == rhs,
        poly_to_json(lhs), poly_to_json(rhs),
        "h* (interpolated) vs descent enumerator over filtered words",
    )


def check_conjecture_hvector(a: Arbor) -> Report:
    """Three verdicts on the h-vector: palindromic; gamma coefficients all
    nonnegative; g-vector passes the Macaulay growth test."""
    h = h_vector(polytope_of_arbor(a))
    hp = h.to_poly()
    n = a.n
    palindromic = is_palindromic(hp, n)
    if palindromic:
        gammas = to_gamma_basis(hp, n).gammas
        gamma_ok = all(g >= 0 for g in gammas)
        gamma_txt = f"gamma={list(gammas)} nonnegative={gamma_ok}"
    else:
        gamma_ok = False
        gamma_txt = "gamma=undefined (not palindromic)"
    g = [1] + [h.hs[i] - h.hs[i - 1] for i in range(1, n // 2 + 1)]
    g_ok = m_sequence_check(g)
    ok = palindromic and gamma_ok and g_ok
    return Report(
        "conjecture_hvector", _arbor_params(a), ok,
        list(h.hs), None,
        f"palindromic={palindromic}; {gamma_txt}; g={g} m_sequence={g_ok}",
    )


def check_conjecture_roots(a: Arbor) -> Report:
    """All roots of n! Ehr real and inside [-1, 0], by Sturm counts."""
    n = a.n
    p = ehrhart_interpolated(polytope_of_arbor(a)) * factorial(n)
    ok = all_roots_real_in(p, -1, 0)
    real = sturm_real_root_count(p)
    boxed = sturm_real_root_count(p, -1, 0) + (1 if p(-1) == 0 else 0)
    return Report(
        "conjecture_roots", _arbor_params(a), ok,
        poly_to_json(p), None,
        f"degree={p.degree}; distinct real roots={real}; in [-1,0]={boxed}",
    )


_CONJECTURE_CHECKS = {
    "hstar": check_conjecture_hstar,
    "hvector": check_conjecture_hvector,
    "roots": check_conjecture_roots,
}


def check_arbor(a: Arbor, which: str):
    """Reports for one arbor; which is a conjecture name or 'all'."""
    names = list(_CONJECTURE_CHECKS) if which == "all" else [which]
    return [_CONJECTURE_CHECKS[name](a) for name in names]


def _sweep_worker(args):
    a, which = args
    t0 = time.perf_counter()
    reports = check_arbor(a, which)
    return a, reports, time.perf_counter() - t0


@dataclass
class SweepResult:
    size: int
    which: str
    total: int = 0
    passed: int = 0
    linear_total: int = 0
    linear_passed: int = 0
    failures: list = field(default_factory=list)
    max_seconds: float = 0.0

    @property
    def all_passed(self) -> bool:
        return self.passed == self.total

    def to_json(self) -> dict:
        return {
            "check": "sweep",
            "params": {"size": self.size, "which": self.which},
            "pass": self.all_passed,
            "total": self.total,
            "passed": self.passed,
            "linear": {"total": self.linear_total, "passed": self.linear_passed},
            "failures": [r.to_json() for r in self.failures],
        }


def sweep(size: int, which: str = "all", jobs: int = 1, force: bool = False) -> SweepResult:
    """Run the selected conjecture check over every arbor of the given size.

    Linear arbors (chain-shaped trees) are tallied separately so that slice
    stays visible in the aggregate.  Failures keep their full reports.
    """
    if which != "all" and which not in _CONJECTURE_CHECKS:
        raise ValueError(f"unknown check {which!r}")
    cap = min(SIZE_CAPS.values()) if which == "all" else SIZE_CAPS[which]
    if size > cap and not force:
        raise ValueError(f"size {size} exceeds the default cap {cap}; pass force to override")
    result = SweepResult(size, which)
    work = ((a, which) for a in enumerate_arbors(size))
    if jobs > 1:
        with Pool(jobs) as pool:
            outcomes = list(pool.imap(_sweep_worker, work, chunksize=16))
    else:
        outcomes = map(_sweep_worker, work)
    for a, reports, seconds in outcomes:
        ok = all(r.passed for r in reports)
        result.total += 1
        result.passed += ok
        if is_linear(a):
            result.linear_total += 1
            result.linear_passed += ok
        result.failures.extend(r for r in reports if not r.passed)
        result.max_seconds = max(result.max_seconds, seconds)
    return result
