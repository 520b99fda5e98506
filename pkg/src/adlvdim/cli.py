"""Command-line front end.

Exit status: 0 ok, 1 finding (a theorem check failed), 2 invalid input,
3 insufficient precision (retry with a larger --precision).
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from .dimension import dimension, top_strata, verify_theorems
from .errors import InsufficientPrecision, InvalidInput, TheoremViolation
from .extended import enumerate_esm
from .polygon import ascii_picture, svg_picture
from .semimodule import SlopeDatum, dominant, is_dominant
from .serialize import dumps, esm_document

EXIT_OK, EXIT_FINDING, EXIT_INPUT, EXIT_PRECISION = 0, 1, 2, 3


def _parse_mu(text: str) -> tuple:
    try:
        return tuple(int(p) for p in text.replace(" ", "").split(",") if p != "")
    except ValueError:
        raise InvalidInput(f"cannot parse --mu {text!r}; expected e.g. 0,0,1,1,2") from None


def _slope_mu(args):
    slope = SlopeDatum(args.m, args.h)
    mu = _parse_mu(args.mu)
    if mu and not is_dominant(mu):
        print(f"warning: mu={mu} is not dominant, using {dominant(mu)}", file=sys.stderr)
        mu = dominant(mu)
    return slope, mu


def cmd_dim(args) -> int:
    slope, mu = _slope_mu(args)
    try:
        report = dimension(slope, mu)
    except TheoremViolation as exc:
        if args.json:
            print(json.dumps({"violation": str(exc), **exc.instance.as_dict()}))
        else:
            print(f"VIOLATION: {exc}")
        return EXIT_FINDING
    if args.json:
        print(json.dumps(report.as_dict()))
        return EXIT_OK
    print(f"d = {report.d}")
    print(f"extended semi-modules: {report.esm_count}")
    hist = ", ".join(f"{k}: {v}" for k, v in sorted(report.dim_histogram.items()))
    print(f"|V| histogram: {{{hist}}}")
    print(f"top strata: {len(report.top_strata)}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    slope, mu = _slope_mu(args)
    for esm in enumerate_esm(slope, mu):
        print(dumps(esm_document(esm)))
    return EXIT_OK


def cmd_strata(args) -> int:
    slope, mu = _slope_mu(args)
    found = top_strata(slope, mu) if args.top else enumerate_esm(slope, mu)
    for esm in found:
        print(dumps(esm_document(esm)))
    return EXIT_OK


def cmd_verify(args) -> int:
    start = time.perf_counter()
    summary = verify_theorems(args.h_max, args.m_max, chains=not args.no_chains)
    elapsed = time.perf_counter() - start
    if args.json:
        print(json.dumps({**summary.as_dict(), "seconds": round(elapsed, 3)}))
    else:
        for cell in summary.cells:
            status = "pass" if cell.passed else "FAIL"
            print(f"{status} m={cell.slope.m} h={cell.slope.h} mu={cell.mu} d={cell.d} "
                  f"esm={cell.esm_count} top={cell.top_count}")
            for v in cell.violations:
                print(f"    {v}")
        counts = summary.counts()
        print(", ".join(f"{k}: {v}" for k, v in counts.items()), f"seconds: {elapsed:.1f}")
        print(f"violations: {summary.violations}")
    return EXIT_OK if summary.violations == 0 else EXIT_FINDING


def cmd_oracle(args) -> int:
    from .oracle import get_field, oracle_checks

    slope, mu = _slope_mu(args)
    field = get_field(args.prime, args.ext_degree)
    results = oracle_checks(slope, mu, field, args.precision, args.samples, args.seed)
    failed = [r for r in results if not r.passed]
    if args.json:
        print(json.dumps({
            "m": slope.m, "h": slope.h, "mu": list(mu),
            "field": [field.p, field.n], "precision": args.precision, "seed": args.seed,
            "samples": [r.as_dict() for r in results],
            "failures": len(failed),
        }))
    else:
        for r in results:
            status = "pass" if r.passed else "FAIL"
            print(f"{status} {r.kind:7s} B={r.base} inv={r.relative_position} "
                  f"recovered={r.recovered}")
            for p in r.problems:
                print(f"    {p}")
        print(f"field: GF({field.p}^{field.n}), precision: {args.precision}, seed: {args.seed}")
        print(f"samples: {len(results)}, failures: {len(failed)}")
    return EXIT_OK if not failed else EXIT_FINDING


def cmd_polygon(args) -> int:
    slope, mu = _slope_mu(args)
    sys.stdout.write(svg_picture(slope, mu) if args.svg else ascii_picture(slope, mu))
    return EXIT_OK


def _add_slope(p, need_mu=True):
    p.add_argument("--m", type=int, required=True, help="valuation of det(b)")
    p.add_argument("--h", type=int, required=True, help="rank")
    p.add_argument("--mu", required=need_mu, help="comma-separated coweight, e.g. 0,0,1,1,2")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adlvdim",
        description="Extended semi-modules and stratum dimensions for superbasic b in GL_h.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dim", help="dimension d and stratum histogram")
    _add_slope(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("enumerate", help="all extended semi-modules, one JSON document per line")
    _add_slope(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("strata", help="strata as JSON lines; --top keeps the maximal ones")
    _add_slope(p)
    p.add_argument("--top", action="store_true")
    p.set_defaults(func=cmd_strata)

    p = sub.add_parser("verify", help="exhaustive sweep over small slopes")
    p.add_argument("--h-max", type=int, required=True)
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--no-chains", action="store_true", help="skip reduction-chain checks")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="build lattices over GF(p^n) and compare")
    _add_slope(p)
    p.add_argument("--prime", type=int, default=2)
    p.add_argument("--ext-degree", type=int, default=4)
    p.add_argument("--precision", type=int, default=30)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=10, help="random points per cyclic stratum")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("polygon", help="mu-polygon, nu-line and the counted lattice points")
    _add_slope(p)
    p.add_argument("--svg", action="store_true")
    p.set_defaults(func=cmd_polygon)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InsufficientPrecision as exc:
        print(f"error: insufficient precision: {exc}", file=sys.stderr)
        return EXIT_PRECISION


if __name__ == "__main__":
    sys.exit(main())
