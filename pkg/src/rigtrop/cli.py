"""Command-line interface: ``rigtrop <command> ...``."""
from __future__ import annotations

import argparse
import json
import sys

from .boxball import evolve_T1inf, evolve_Trs, path_to_state, render
from .errors import RigtropError
from .loopsym import cylindric_loop_schur, elementary_e, loop_schur, tau_poly, to_text
from .paths import PathSpec, format_words, parse_path
from .rigged import RiggedConfiguration, phi, phi_inverse
from .suites import SUITES, run_suite, shape_text, sweep_conjecture
from .tableaux import SkewShape, build_cylindric_shape
from .tropical import (
    conjectured_shape,
    energy_formula_trop,
    first_shape_theorem,
    path_coordinates,
    trop_eval,
)


def _ints(text: str) -> tuple:
    text = text.strip()
    return tuple(int(x) for x in text.split(",")) if text else ()


def _pair(text: str) -> tuple[int, int]:
    parts = _ints(text)
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected r,s but got {text!r}")
    return parts


# ------------------------------------------------------------------ commands


def cmd_evolve(args):
    ps = parse_path(args.path)
    if args.rs is None:
        state = path_to_state(ps.factors)
        if any(len(w) != 1 for w in ps.factors):
            raise RigtropError("T^{1,inf} evolution needs a path of single letters")
        for _ in range(args.steps + 1):
            print(render(state))
            state = evolve_T1inf(state, ps.n)
        return 0
    r, s = args.rs
    if not 1 <= r <= ps.n - 1 or s < 1:
        raise RigtropError(f"need 1 <= r <= {ps.n - 1} and s >= 1")
    p = ps.factors
    for _ in range(args.steps + 1):
        print(format_words(p))
        p, _ = evolve_Trs(p, r, s, ps.n)
    return 0


def cmd_phi(args):
    ps = parse_path(args.path)
    d = phi(ps.factors, ps.n).to_dict()
    d["widths"] = [len(w) for w in ps.factors]
    print(json.dumps(d, sort_keys=True))
    return 0


def cmd_phi_inv(args):
    d = json.loads(args.rc)
    rc = RiggedConfiguration.from_dict(d)
    widths = _ints(args.widths) if args.widths else d.get("widths")
    p = phi_inverse(rc, widths)
    print(PathSpec(rc.n, p))
    return 0


def _polynomial(args):
    if args.kind == "e":
        return elementary_e(args.k, args.r, args.m, args.n)
    if args.kind == "tau":
        return tau_poly(args.k, args.r, args.m, args.n)
    if args.shape is None:
        raise RigtropError(f"--shape is required for --kind {args.kind}")
    base = SkewShape(_ints(args.shape), _ints(args.inner or ""))
    if args.kind == "schur":
        return loop_schur(base, args.r, args.m, args.n)
    if args.s is None:
        raise RigtropError("--s is required for --kind cschur")
    return cylindric_loop_schur(build_cylindric_shape(base, args.n, args.s), args.r, args.m, args.n)


def cmd_lsym_expand(args):
    f = _polynomial(args)
    print(to_text(f))
    if args.count:
        print(f"# {len(f)} terms", file=sys.stderr)
    return 0


def cmd_trop_eval(args):
    ps = parse_path(args.path)
    args.n, args.m = ps.n, len(ps.factors)
    value = trop_eval(_polynomial(args), path_coordinates(ps.factors, ps.n))
    print(value)
    return 0


def cmd_trop_shapes(args):
    ps = parse_path(args.path)
    p, n = ps.factors, ps.n
    rc = phi(p, n)
    out = {
        "path": str(ps),
        "first_shape": shape_text(first_shape_theorem(p, n)),
        "shapes": {
            str(s): {"phi": shape_text(rc.nu(s)), "formula": shape_text(conjectured_shape(p, s, n))}
            for s in range(1, n)
        },
    }
    if args.ell is not None:
        out["energy"] = energy_formula_trop(p, args.ell, n)
    print(json.dumps(out, sort_keys=True))
    return 0


def cmd_verify(args):
    names = [x for chunk in args.suite for x in chunk.split(",") if x]
    if not names or names == ["all"]:
        names = list(SUITES)
    status, report = run_suite(names)
    print(json.dumps(report, sort_keys=True, indent=2))
    return status


def cmd_sweep(args):
    report = sweep_conjecture(args.n, args.m, args.width_cap, args.samples, args.seed, args.exhaustive)
    text = report.to_csv()
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(json.dumps(report.summary(), sort_keys=True), file=sys.stderr)
    return 1 if any(report.mismatches.values()) else 0


# ------------------------------------------------------------------ parser


def _add_poly_args(p, with_ring=True):
    p.add_argument("--kind", choices=["e", "schur", "cschur", "tau"], required=True)
    p.add_argument("--k", type=int, default=1, help="degree for e and tau")
    p.add_argument("--r", type=int, default=0, help="color shift")
    p.add_argument("--shape", help="outer partition, e.g. 2,1")
    p.add_argument("--inner", help="inner partition for skew shapes")
    p.add_argument("--s", type=int, help="cylinder parameter for cschur")
    if with_ring:
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--n", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rigtrop", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("evolve", help="box-ball time evolution")
    p.add_argument("--path", required=True, help="e.g. 'n=4; 1,3,3,2,1'")
    p.add_argument("--steps", type=int, default=1)
    p.add_argument("--rs", type=_pair, help="use T^{r,s} instead of T^{1,inf}")
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("phi", help="rigged configuration of a path, as JSON")
    p.add_argument("--path", required=True)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("phi-inv", help="path of a rigged configuration")
    p.add_argument("--rc", required=True, help="JSON as printed by 'phi'")
    p.add_argument("--widths", help="factor widths left to right, e.g. 1,2,1")
    p.set_defaults(func=cmd_phi_inv)

    lsym = sub.add_parser("lsym", help="loop symmetric functions").add_subparsers(dest="action", required=True)
    p = lsym.add_parser("expand", help="print a polynomial in canonical text form")
    _add_poly_args(p)
    p.add_argument("--count", action="store_true", help="report the number of terms on stderr")
    p.set_defaults(func=cmd_lsym_expand)

    trop = sub.add_parser("trop", help="tropical evaluation").add_subparsers(dest="action", required=True)
    p = trop.add_parser("eval", help="min-plus value of a polynomial at a path")
    p.add_argument("--path", required=True)
    _add_poly_args(p, with_ring=False)
    p.set_defaults(func=cmd_trop_eval)
    p = trop.add_parser("shapes", help="rigged configuration shapes against the tropical formulas")
    p.add_argument("--path", required=True)
    p.add_argument("--ell", type=int, help="also report the tropical energy for T^{1,ell}")
    p.set_defaults(func=cmd_trop_shapes)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", nargs="+", default=["all"], help=f"any of: {', '.join(SUITES)}, or all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="compare phi shapes with the tropical shape formula")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--width-cap", type=int, default=2)
    p.add_argument("--samples", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--out", help="write the CSV here instead of stdout")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (RigtropError, ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
