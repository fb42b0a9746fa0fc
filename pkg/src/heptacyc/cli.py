"""Command-line interface.

Exit codes: 0 success, 1 verification mismatch, 2 singular matrix (or a
float-mode pivot breakdown), 3 input error.
"""

import argparse
import json
import sys

from . import bench as bench_mod
from .bandfile import (
    dense_to_csv,
    load_band_file,
    load_dense_csv,
    load_rhs,
)
from .core import AntiCyclicHeptaMatrix, from_dense
from .errors import GenerationFailed, InputError, PivotBreakdown, SingularMatrix
from .factorization import determinant, factor
from .generate import generate
from .scalars import Tolerance, format_rational
from .solve import anti_determinant, anti_invert, invert, solve
from .verify import verify_matrix

EXIT_OK, EXIT_MISMATCH, EXIT_SINGULAR, EXIT_INPUT = 0, 1, 2, 3


def _load(args):
    path = args.file
    if str(path).endswith(".csv"):
        return from_dense(load_dense_csv(path), kind=args.kind)
    return load_band_file(path)


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_det(args):
    M = _load(args)
    tol = Tolerance(eps_abs=args.eps_abs, eps_rel=args.eps_rel)
    if args.mode == "float":
        H = M.core if isinstance(M, AntiCyclicHeptaMatrix) else M
        det = determinant(H, mode="float", tol=tol)
        if isinstance(M, AntiCyclicHeptaMatrix):
            det *= (-1) ** (M.n // 2)
        print(repr(det))
        return EXIT_OK
    if isinstance(M, AntiCyclicHeptaMatrix):
        print(format_rational(anti_determinant(M)))
    else:
        print(format_rational(determinant(M)))
    return EXIT_OK


def cmd_solve(args):
    M = _load(args)
    rhs = load_rhs(args.rhs)
    if isinstance(M, AntiCyclicHeptaMatrix):
        x = list(reversed(solve(factor(M.core), M.core, rhs).solution))
    else:
        x = solve(factor(M), M, rhs).solution
    for value in x:
        print(format_rational(value))
    return EXIT_OK


def cmd_invert(args):
    M = _load(args)
    if isinstance(M, AntiCyclicHeptaMatrix):
        X = anti_invert(M)
    else:
        X = invert(M)
    _emit(dense_to_csv(X), args.out)
    return EXIT_OK


def cmd_anti_invert(args):
    M = _load(args)
    if not isinstance(M, AntiCyclicHeptaMatrix):
        raise InputError(f"{args.file}: anti-invert needs a file with kind 'anti'")
    _emit(dense_to_csv(anti_invert(M)), args.out)
    return EXIT_OK


def cmd_verify(args):
    report = verify_matrix(_load(args), minors=args.minors)
    print(report.table())
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_gen(args):
    try:
        bf = generate(args.n, args.seed, args.zero_pivots, args.kind)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(bf.dumps(), args.out)
    return EXIT_OK


def _sizes(text):
    try:
        sizes = [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of integers: {text!r}")
    if not sizes or min(sizes) < 8:
        raise argparse.ArgumentTypeError("sizes must be integers >= 8")
    return sizes


def cmd_bench(args):
    tol = Tolerance(eps_abs=args.eps_abs, eps_rel=args.eps_rel)
    try:
        records = bench_mod.bench(args.sizes, mode=args.mode, trials=args.trials,
                                  exact_cap=args.exact_cap, invert_cap=args.invert_cap,
                                  tol=tol)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    summary = bench_mod.medians(records)
    if args.json:
        print(json.dumps({"records": [r.as_dict() for r in records], "medians": summary},
                         indent=2))
        return EXIT_OK
    cols = ["n", "mode", "trial", "factor_s", "solve_s", "invert_s", "op_count",
            "substituted", "breakdown"]
    print(",".join(cols))
    for r in records:
        print(",".join(_cell(getattr(r, c)) for c in cols))
    for row in summary:
        print(",".join(_cell(row.get(c, "median" if c == "trial" else "")) for c in cols))
    return EXIT_OK


def _cell(x):
    if x is None:
        return ""
    if isinstance(x, float):
        return f"{x:.6g}"
    return str(x)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="heptacyc",
        description="Exact determinants, solves and inverses of cyclic heptadiagonal matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def matrix_cmd(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", help="band file (.json) or dense matrix (.csv)")
        p.add_argument("--kind", choices=["cyclic", "anti"], default="cyclic",
                       help="structure of a dense .csv input (default: cyclic)")
        p.set_defaults(func=func)
        return p

    def tolerance_flags(p):
        p.add_argument("--eps-rel", type=float, default=1e-12,
                       help="float-mode relative breakdown threshold")
        p.add_argument("--eps-abs", type=float, default=0.0,
                       help="float-mode absolute breakdown threshold")

    p = matrix_cmd("det", cmd_det, "print the determinant")
    p.add_argument("--mode", choices=["exact", "float"], default="exact")
    tolerance_flags(p)

    p = matrix_cmd("solve", cmd_solve, "solve H x = rhs, one component per line")
    p.add_argument("--rhs", required=True, help="file with n rationals, one per line")

    p = matrix_cmd("invert", cmd_invert, "write the exact inverse as CSV")
    p.add_argument("--out", help="output path (default: stdout)")

    p = matrix_cmd("anti-invert", cmd_anti_invert, "invert an anti-cyclic matrix")
    p.add_argument("--out", help="output path (default: stdout)")

    p = matrix_cmd("verify", cmd_verify, "cross-check every result against the dense oracle")
    p.add_argument("--minors", action="store_true",
                   help="also compare leading principal minors")

    p = sub.add_parser("gen", help="write a reproducible random band file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--zero-pivots", type=int, default=0)
    p.add_argument("--kind", choices=["cyclic", "anti"], default="cyclic")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time factor/solve/invert and count operations")
    p.add_argument("--sizes", type=_sizes, required=True, help="comma-separated orders")
    p.add_argument("--mode", choices=["exact", "float"], default="float")
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--json", action="store_true", help="emit JSON instead of CSV")
    p.add_argument("--exact-cap", type=int, default=bench_mod.EXACT_CAP,
                   help="largest n allowed in exact mode")
    p.add_argument("--invert-cap", type=int, default=bench_mod.INVERT_CAP,
                   help="largest n for which inversion is timed")
    tolerance_flags(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SingularMatrix as exc:
        print(f"error: singular matrix: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except PivotBreakdown as exc:
        print(f"error: pivot breakdown in float mode: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GenerationFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
