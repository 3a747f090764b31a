"""Command-line interface.

Subcommands compute invariants for a polytope given as --octopus n,k,
--qndk n,d,k or an arbor JSON file, simulate the parking protocol, run
conjecture sweeps, and print the f-polynomial table.  Output is JSON on
stdout (except the default table rendering); exit codes: 0 success,
1 conjecture failure, 2 argument error, 3 invalid arbor file, 4 internal
identity mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from math import factorial

from .arbor import InvalidArborError, arbor_from_json, octopus
from .checker import check_arbor, sweep
from .closedform import ehrhart_Qndk, ehrhart_Qnk, f_poly
from .lattice import (
    enumerate_points,
    ehrhart_interpolated,
    h_vector,
    polytope_Qndk,
    polytope_of_arbor,
)
from .parking import park
from .polyalg import (
    Poly,
    VerificationError,
    format_poly,
    hstar_from_ehrhart,
    is_palindromic,
    to_gamma_basis,
    to_magic_basis,
)

DEFAULT_MAX_POINTS = 10 ** 6


def _emit(payload):
    print(json.dumps(payload))


def _rat_coeffs(p: Poly):
    return [str(Fraction(c)) for c in p.coeffs]


def _parse_ints(text, count, what):
    parts = text.split(",")
    if len(parts) != count:
        raise ValueError(f"{what} wants {count} comma-separated integers, got {text!r}")
    return tuple(int(x) for x in parts)


def _add_source_flags(sub):
    g = sub.add_mutually_exclusive_group(required=True)
    g.add_argument("--octopus", metavar="N,K", help="octopus arbor: root {k+1..n}, leaves {1}..{k}")
    g.add_argument("--qndk", metavar="N,D,K", help="polytope with x_i <= 1 for i <= k and sum x <= d")
    g.add_argument("--arbor", metavar="FILE", help="arbor JSON file")


class _Source:
    """Resolved --octopus/--qndk/--arbor choice: a polytope plus, when the
    parameters admit one, the closed-form Ehrhart polynomial."""

    def __init__(self, args):
        self.closed = None
        if args.octopus:
            n, k = _parse_ints(args.octopus, 2, "--octopus")
            try:
                self.polytope = polytope_of_arbor(octopus(n, k))
            except InvalidArborError as e:
                # Bad parameters, not a bad file: report as a usage error.
                raise ValueError(str(e)) from e
            self.closed = ehrhart_Qnk(n, k)
        elif args.qndk:
            n, d, k = _parse_ints(args.qndk, 3, "--qndk")
            self.polytope = polytope_Qndk(n, d, k)
            self.closed = ehrhart_Qndk(n, d, k)
        else:
            with open(args.arbor) as fh:
                a = arbor_from_json(fh.read())
            self.polytope = polytope_of_arbor(a)
        self.n = self.polytope.n

    def ehrhart(self) -> Poly:
        return self.closed if self.closed is not None else ehrhart_interpolated(self.polytope)


def cmd_ehrhart(args) -> int:
    src = _Source(args)
    method = args.method
    if method is None:
        method = "closed" if src.closed is not None else "interp"
    if method in ("closed", "both") and src.closed is None:
        raise ValueError("no closed form for a general arbor file; use --method interp")
    if method == "closed":
        _emit({"ehrhart": _rat_coeffs(src.closed)})
    elif method == "interp":
        _emit({"ehrhart": _rat_coeffs(ehrhart_interpolated(src.polytope))})
    else:
        interp = ehrhart_interpolated(src.polytope)
        match = interp == src.closed
        _emit({"ehrhart": _rat_coeffs(src.closed), "match": match})
        if not match:
            raise VerificationError("closed form and interpolation disagree")
    return 0


def cmd_hstar(args) -> int:
    src = _Source(args)
    _emit({"hstar": list(hstar_from_ehrhart(src.ehrhart(), src.n).coeffs)})
    return 0


def cmd_hvector(args) -> int:
    src = _Source(args)
    h = h_vector(src.polytope)
    payload = {"h": list(h.hs)}
    if args.points:
        cap = int(os.environ.get("ARBORLAT_MAX_POINTS", DEFAULT_MAX_POINTS))
        if h.total > cap:
            raise ValueError(f"{h.total} points exceed the listing cap {cap} (ARBORLAT_MAX_POINTS)")
        payload["points"] = [list(pt) for pt in enumerate_points(src.polytope, 1, cap)]
    _emit(payload)
    return 0


def cmd_gamma(args) -> int:
    src = _Source(args)
    h = h_vector(src.polytope)
    hp = h.to_poly()
    if is_palindromic(hp, src.n):
        payload = {"h": list(h.hs), "palindromic": True,
                   "gamma": list(to_gamma_basis(hp, src.n).gammas)}
    else:
        payload = {"h": list(h.hs), "palindromic": False, "gamma": None}
    _emit(payload)
    return 0


def cmd_magic(args) -> int:
    src = _Source(args)
    scaled = src.ehrhart() * factorial(src.n)
    mv = to_magic_basis(scaled, src.n)
    _emit({"c": list(mv.cs), "magic_positive": mv.is_nonnegative})
    return 0


def cmd_park(args) -> int:
    word = _parse_ints(args.word, args.word.count(",") + 1, "--word")
    n = args.spaces
    if len(word) != n:
        raise ValueError(f"{len(word)} cars but {n} spaces; the protocol wants equal counts")
    d = args.alphabet if args.alphabet is not None else n
    outcome = park(word, d)
    _emit({"spots": list(outcome.spot), "lucky": list(outcome.lucky),
           "unlucky": outcome.unlucky_count})
    return 0


def cmd_check(args) -> int:
    if args.arbor:
        with open(args.arbor) as fh:
            a = arbor_from_json(fh.read())
        reports = check_arbor(a, args.conjecture)
        ok = all(r.passed for r in reports)
        _emit({"check": "arbor", "pass": ok, "reports": [r.to_json() for r in reports]})
        return 0 if ok else 1
    result = sweep(args.size, args.conjecture, jobs=args.jobs, force=args.force)
    _emit(result.to_json())
    print(f"worst per-arbor time: {result.max_seconds:.3f}s", file=sys.stderr)
    return 0 if result.all_passed else 1


def cmd_table1(args) -> int:
    entries = [(n, k, format_poly(f_poly(n, k))) for n in range(1, args.max_n + 1)
               for k in range(n + 1)]
    if args.json:
        _emit({"entries": [{"n": n, "k": k, "f": f} for n, k, f in entries]})
        return 0
    width = max(len(f) for _, _, f in entries) + 2
    header = "      " + "".join(f"k={k}".ljust(width) for k in range(args.max_n + 1))
    print(header.rstrip())
    for n in range(1, args.max_n + 1):
        row = f"n={n}   " + "".join(f.ljust(width) for m, k, f in entries if m == n)
        print(row.rstrip())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arborlat",
        description="Exact lattice-point invariants of arbor polytopes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ehrhart", help="Ehrhart polynomial")
    _add_source_flags(p)
    p.add_argument("--method", choices=["closed", "interp", "both"])
    p.set_defaults(func=cmd_ehrhart)

    p = sub.add_parser("hstar", help="h*-polynomial")
    _add_source_flags(p)
    p.set_defaults(func=cmd_hstar)

    p = sub.add_parser("hvector", help="lattice points by nonzero coordinates")
    _add_source_flags(p)
    p.add_argument("--points", action="store_true", help="also list the points")
    p.set_defaults(func=cmd_hvector)

    p = sub.add_parser("gamma", help="gamma decomposition of the h-vector polynomial")
    _add_source_flags(p)
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("magic", help="decomposition of n! Ehr in the basis t^i (1+t)^(n-i)")
    _add_source_flags(p)
    p.set_defaults(func=cmd_magic)

    p = sub.add_parser("park", help="simulate the parking protocol for one word")
    p.add_argument("--word", required=True, metavar="CSV")
    p.add_argument("--spaces", required=True, type=int)
    p.add_argument("--alphabet", type=int)
    p.set_defaults(func=cmd_park)

    p = sub.add_parser("check", help="run conjecture checks")
    p.add_argument("--conjecture", choices=["hstar", "hvector", "roots", "all"], default="all")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--size", type=int, help="sweep all arbors of this size")
    g.add_argument("--arbor", metavar="FILE")
    p.add_argument("--force", action="store_true", help="override the sweep size cap")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("table1", help="f-polynomial table")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table1)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        return args.func(args)
    except InvalidArborError as e:
        print(f"error: invalid arbor: {e}", file=sys.stderr)
        return 3
    except VerificationError as e:
        print(f"error: internal identity mismatch: {e}", file=sys.stderr)
        return 4
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
