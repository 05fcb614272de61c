"""Command-line front end.

Every command reads an arrangement file (JSON, see the arrangement module)
and prints deterministically ordered text; some offer --json.  Rationals on
the command line are "p" or "p/q"; decimal input is rejected because the
floor computations are exact.  Exit codes: 0 success, 1 usage or parse
error, 2 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import arrangement as arrmod
from . import building as bmod
from . import graded as gmod
from . import multiplier as mmod
from .errors import InvariantError
from .lattice import IntersectionLattice, compute_lattice


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 instead of argparse's default 2
        raise _UsageError(f"{self.prog}: {message}")


def _rational(text: str) -> Fraction:
    return arrmod.parse_rational(text)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise ValueError("must be >= 1")
    return value


def _load(path: str) -> arrmod.Arrangement:
    with open(path, "r", encoding="utf-8") as fh:
        return arrmod.parse_arrangement(fh.read())


def _building_set(lat: IntersectionLattice, choice: str) -> bmod.BuildingSet:
    if choice == "min":
        return bmod.minimal_building_set(lat)
    return bmod.full_building_set(lat)


def _flat_json(flat) -> dict:
    return {"rank": flat.rank, "s": flat.mult, "closed": list(flat.closed_set)}


def _flat_line(flat) -> str:
    closed = ",".join(map(str, flat.closed_set)) or "-"
    return f"{flat.rank}\t{flat.mult}\t{closed}"


def _cmd_braid(args) -> int:
    text = arrmod.serialize_arrangement(arrmod.braid(args.n))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_lattice(args) -> int:
    lat = compute_lattice(_load(args.file))
    if args.json:
        print(json.dumps([_flat_json(f) for f in lat.flats], indent=2))
    else:
        for f in lat.flats:
            print(_flat_line(f))
    return 0


def _cmd_building(args) -> int:
    lat = compute_lattice(_load(args.file))
    bs = _building_set(lat, args.set)
    if args.verify:
        bad = bmod.building_set_obstruction(lat, bs.flats)
        if bad is not None:
            raise InvariantError(
                f"building set check failed at flat with closed set "
                f"{list(bad.closed_set)}"
            )
        print(f"building set OK ({len(bs)} flats)")
    if args.json:
        print(json.dumps([_flat_json(f) for f in bs.flats], indent=2))
    else:
        for f in bs.flats:
            print(_flat_line(f))
    return 0


def _cmd_mi(args) -> int:
    lat = compute_lattice(_load(args.file))
    pres = mmod.presentation(lat, _building_set(lat, args.set), args.lam)
    if args.json:
        doc = {
            "lambda": str(pres.lam),
            "set": args.set,
            "unit": pres.is_unit,
            "terms": [
                dict(_flat_json(W), exponent=e) for W, e in pres.terms
            ],
        }
        print(json.dumps(doc, indent=2))
    elif pres.is_unit:
        print("(1)")
    else:
        for W, e in pres.terms:
            closed = ",".join(map(str, W.closed_set))
            print(f"{closed}\t{W.rank}\t{W.mult}\t{e}")
    return 0


def _cmd_lct(args) -> int:
    print(mmod.lct(compute_lattice(_load(args.file))))
    return 0


def _cmd_support(args) -> int:
    lat = compute_lattice(_load(args.file))
    for f in mmod.support(lat, args.lam):
        print(_flat_line(f))
    return 0


def _cmd_jumps(args) -> int:
    lat = compute_lattice(_load(args.file))
    for c in mmod.jump_candidates(lat, args.max):
        if args.verify:
            if mmod.verify_jump(lat, c, args.degree):
                print(f"{c}\tverified")
            else:
                print(f"{c}\tnot detected up to degree {args.degree}")
        else:
            print(c)
    return 0


def _cmd_member(args) -> int:
    arr = _load(args.file)
    lat = compute_lattice(arr)
    poly = gmod.parse_polynomial(args.poly, arr.dim)
    pres = mmod.presentation(lat, _building_set(lat, args.set), args.lam)
    print("true" if mmod.membership(arr, pres, poly) else "false")
    return 0


def _cmd_resolution(args) -> int:
    lat = compute_lattice(_load(args.file))
    table = mmod.resolution_table(lat, _building_set(lat, args.set))
    for row in table.rows:
        closed = ",".join(map(str, row.flat.closed_set))
        print(f"{closed}\t{row.discrepancy}\t{row.vanishing_order}")
    return 0


def _cmd_hilbert(args) -> int:
    lat = compute_lattice(_load(args.file))
    pres = mmod.presentation(lat, _building_set(lat, args.set), args.lam)
    bound = args.degree if args.degree is not None else mmod.default_degree_bound(pres)
    dims = gmod.hilbert(mmod.presentation_ideal(pres, bound))
    print(" ".join(map(str, dims)))
    return 0


def _cmd_verify_theorem(args) -> int:
    lat = compute_lattice(_load(args.file))
    pres_min = mmod.presentation(lat, bmod.minimal_building_set(lat), args.lam)
    pres_full = mmod.presentation(lat, bmod.full_building_set(lat), args.lam)
    bound = (args.degree if args.degree is not None
             else mmod.default_degree_bound(pres_min, pres_full))
    a = mmod.presentation_ideal(pres_min, bound)
    b = mmod.presentation_ideal(pres_full, bound)
    print("minimal:", " ".join(map(str, gmod.hilbert(a))))
    print("full:   ", " ".join(map(str, gmod.hilbert(b))))
    for d in range(bound + 1):
        if a.piece_rows[d] != b.piece_rows[d]:
            print(f"DIFFER at degree {d}")
            return 0
    print(f"EQUAL up to degree {bound}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="arrideals",
        description="Multiplier ideals of central hyperplane arrangements.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.set_defaults(func=func)
        return p

    p = add("braid", _cmd_braid,
            "Write the arrangement of all x_i = x_j in dimension n.")
    p.add_argument("n", type=int)
    p.add_argument("-o", "--output", metavar="FILE")

    p = add("lattice", _cmd_lattice,
            "List all flats: rank, total multiplicity s, closed hyperplane set.")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    p = add("building", _cmd_building,
            "List the flats of a building set (minimal: the irreducible flats).")
    p.add_argument("file")
    p.add_argument("--set", choices=("min", "full"), default="min")
    p.add_argument("--json", action="store_true")
    p.add_argument("--verify", action="store_true",
                   help="check the defining property over every flat first")

    p = add("mi", _cmd_mi,
            "Multiplier ideal at lambda as terms (closed set, rank, s, exponent) "
            "with exponent floor(lambda*s) - rank + 1; '(1)' means the unit ideal.")
    p.add_argument("file")
    p.add_argument("--lambda", dest="lam", type=_rational, required=True,
                   metavar="P/Q")
    p.add_argument("--set", choices=("min", "full"), default="min")
    p.add_argument("--json", action="store_true")

    p = add("lct", _cmd_lct,
            "Log canonical threshold: min rank/s over the minimal building set.")
    p.add_argument("file")

    p = add("support", _cmd_support,
            "Minimal-building-set flats with lambda >= rank/s.")
    p.add_argument("file")
    p.add_argument("--lambda", dest="lam", type=_rational, required=True,
                   metavar="P/Q")

    p = add("jumps", _cmd_jumps,
            "Candidate jumping numbers m/s(W) up to a bound, optionally verified "
            "by comparing graded ideals across each candidate.")
    p.add_argument("file")
    p.add_argument("--max", type=_rational, required=True, metavar="P/Q")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--degree", type=_positive_int, default=4,
                   help="truncation degree for verification (default 4)")

    p = add("member", _cmd_member,
            "Test membership of a polynomial in the multiplier ideal at lambda.")
    p.add_argument("file")
    p.add_argument("--lambda", dest="lam", type=_rational, required=True,
                   metavar="P/Q")
    p.add_argument("--poly", required=True,
                   help="e.g. 'x0 - x1' or '2/3*x0^2*x1 + x2'")
    p.add_argument("--set", choices=("min", "full"), default="min")

    p = add("resolution", _cmd_resolution,
            "Per building-set flat: discrepancy rank-1 and vanishing order s.")
    p.add_argument("file")
    p.add_argument("--set", choices=("min", "full"), default="min")

    p = add("hilbert", _cmd_hilbert,
            "Hilbert function (piece dimensions) of the multiplier ideal at lambda.")
    p.add_argument("file")
    p.add_argument("--lambda", dest="lam", type=_rational, required=True,
                   metavar="P/Q")
    p.add_argument("--set", choices=("min", "full"), default="min")
    p.add_argument("--degree", type=_positive_int, default=None)

    p = add("verify-theorem", _cmd_verify_theorem,
            "Compare the multiplier ideal over the minimal building set against "
            "the full proper lattice, degree by degree.")
    p.add_argument("file")
    p.add_argument("--lambda", dest="lam", type=_rational, required=True,
                   metavar="P/Q")
    p.add_argument("--degree", type=_positive_int, default=None)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except InvariantError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
