"""Command-line front end.

Subcommands: hilbert, algebra, domain, survey, compare, reduce.
Exit codes: 0 success (and certified, where that applies), 2 invalid input,
3 uncertified result.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .arith import hilbert_symbol, ramification, relevant_places
from .bounds import johansson_epsilon
from .domain import ford_domain, reduce_to_domain, word_product
from .quat import johansson_volume
from .render import domain_to_svg
from .survey import (
    compare_rows,
    run_survey,
    write_compare_csv,
    write_survey_csv,
)
from .unitgroup import UnitElement

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_UNCERTIFIED = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quatford",
        description=(
            "Fundamental domains, generators and covolumes for the unit "
            "groups of canonical quaternion orders over Q"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ph = sub.add_parser("hilbert", help="Hilbert symbols and ramification of (a, b / Q)")
    ph.add_argument("--a", type=int, required=True)
    ph.add_argument("--b", type=int, required=True)

    pa = sub.add_parser("algebra", help="covolume report for the pair (p, a)")
    pa.add_argument("--p", type=int, required=True)
    pa.add_argument("--a", type=int, required=True)

    pd = sub.add_parser("domain", help="build the Ford fundamental domain")
    pd.add_argument("--p", type=int, required=True)
    pd.add_argument("--a", type=int, required=True)
    pd.add_argument("--out", type=Path, required=True, help="JSON output path")
    pd.add_argument("--svg", type=Path, default=None, help="optional SVG picture")
    pd.add_argument("--tol", type=float, default=1e-9)
    pd.add_argument("--cap", type=int, default=10_000_000, help="hard level cap")
    pd.add_argument("--k", type=float, default=3.0,
                    help="slack constant for the reported radius cutoff")

    ps = sub.add_parser("survey", help="survey all valid (p, a) with p <= pmax")
    ps.add_argument("--pmax", type=int, required=True)
    ps.add_argument("--out", type=Path, required=True, help="CSV output path")
    ps.add_argument("--torsion-free-only", action="store_true")
    ps.add_argument("--tol", type=float, default=1e-9)
    ps.add_argument("--cap", type=int, default=10_000_000)
    ps.add_argument("--k", type=float, default=3.0)
    ps.add_argument("--jobs", type=int, default=1, help="worker processes")
    ps.add_argument("--figures", type=Path, default=None,
                    help="directory for the bar-chart figures")

    pc = sub.add_parser("compare", help="measured generator norms vs bounds")
    pc.add_argument("--pmax", type=int, required=True)
    pc.add_argument("--out", type=Path, required=True)
    pc.add_argument("--k", type=float, default=3.0)
    pc.add_argument("--tol", type=float, default=1e-9)
    pc.add_argument("--cap", type=int, default=10_000_000)
    pc.add_argument("--jobs", type=int, default=1)
    pc.add_argument("--figures", type=Path, default=None)

    pr = sub.add_parser("reduce", help="express an element through the generators")
    pr.add_argument("--p", type=int, required=True)
    pr.add_argument("--a", type=int, required=True)
    pr.add_argument("element", help="comma-separated x0,x1,x2,x3")
    pr.add_argument("--tol", type=float, default=1e-9)
    pr.add_argument("--cap", type=int, default=10_000_000)
    return parser


def _cmd_hilbert(args) -> int:
    if args.a == 0 or args.b == 0:
        print("error: a and b must be nonzero", file=sys.stderr)
        return EXIT_INVALID
    for place in relevant_places(args.a, args.b):
        value = hilbert_symbol(args.a, args.b, place)
        print(f"({args.a},{args.b})_{place} = {value:+d}")
    ram = ramification(args.a, args.b)
    print(f"ramified places: {', '.join(str(v) for v in ram.places) or 'none'}")
    print(f"d_H = {ram.d_h}")
    print("definite" if ram.definite else "indefinite")
    return EXIT_OK


def _cmd_algebra(args) -> int:
    try:
        report = johansson_volume(args.p, args.a)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    payload = report.to_dict()
    payload["torsion_free"] = args.p % 4 == 1
    payload["torsion"] = "torsion-free" if args.p % 4 == 1 else "possibly-torsion"
    print(json.dumps(payload, indent=2))
    return EXIT_OK


def _cmd_domain(args) -> int:
    try:
        dom = ford_domain(args.p, args.a, tolerance=args.tol, hard_level_cap=args.cap)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    payload = dom.to_dict()
    payload["johansson_eps"] = johansson_epsilon(dom.vol_over_pi, args.k)
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    if args.svg is not None:
        domain_to_svg(dom, args.svg)
    status = "certified" if dom.certified else "NOT certified"
    area = "n/a" if dom.area is None else f"{dom.area:.9g}"
    print(
        f"(p,a)=({args.p},{args.a}): {len(dom.sides)} sides, "
        f"{len(dom.generators)} generators, area={area}, "
        f"genus={dom.genus}, level={dom.level_reached}, {status}"
    )
    return EXIT_OK if dom.certified else EXIT_UNCERTIFIED


def _cmd_survey(args) -> int:
    try:
        rows = run_survey(
            args.pmax,
            torsion_free_only=args.torsion_free_only,
            k=args.k,
            tolerance=args.tol,
            hard_level_cap=args.cap,
            jobs=args.jobs,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    args.out.parent.mkdir(parents=True, exist_ok=True)
    main_csv, by_dh_csv = write_survey_csv(rows, args.out)
    print(f"wrote {main_csv} and {by_dh_csv} ({len(rows)} rows)")
    if args.figures is not None:
        from .plots import survey_figures

        for path in survey_figures(rows, args.figures):
            print(f"wrote {path}")
    return EXIT_OK if all(r.certified for r in rows) else EXIT_UNCERTIFIED


def _cmd_compare(args) -> int:
    try:
        rows = run_survey(
            args.pmax,
            k=args.k,
            tolerance=args.tol,
            hard_level_cap=args.cap,
            jobs=args.jobs,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    comp = compare_rows(rows)
    args.out.parent.mkdir(parents=True, exist_ok=True)
    path = write_compare_csv(comp, args.out)
    print(f"wrote {path} ({len(comp)} rows)")
    if args.figures is not None:
        from .plots import compare_figure

        print(f"wrote {compare_figure(comp, args.figures)}")
    return EXIT_OK if all(r.certified for r in rows) else EXIT_UNCERTIFIED


def _cmd_reduce(args) -> int:
    try:
        coords = tuple(int(part) for part in args.element.split(","))
        if len(coords) != 4:
            raise ValueError("element needs 4 comma-separated integers")
        element = UnitElement.from_coords(args.p, args.a, coords)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    dom = ford_domain(args.p, args.a, tolerance=args.tol, hard_level_cap=args.cap)
    if not dom.certified:
        print("error: domain construction did not certify", file=sys.stderr)
        return EXIT_UNCERTIFIED
    word = reduce_to_domain(element, dom)
    product = word_product(dom, word) * element
    print(f"element {element.x}")
    print(f"word (generator indices, applied left to right): {word}")
    print("letters: " + " ".join(str(dom.generators[i].x) for i in word))
    print(f"verification: word product times element = {product.x}")
    if not product.is_identity:
        print("error: reduction did not invert the element", file=sys.stderr)
        return 1
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "hilbert": _cmd_hilbert,
        "algebra": _cmd_algebra,
        "domain": _cmd_domain,
        "survey": _cmd_survey,
        "compare": _cmd_compare,
        "reduce": _cmd_reduce,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
