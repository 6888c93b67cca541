"""kpaths command-line interface.

Exit codes: 0 success, 1 usage error, 2 verification failure, 3 internal error.
"""

from __future__ import annotations

import argparse
import sys

from . import extremal, g6codec, seqcore
from .errors import BudgetExceeded, NoConvergence
from .extremal import Direction, Objective, ObjectiveKind
from .kpathgraph import build_from_sequence
from .spectra import MatrixKind, spectrum

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_INTERNAL = 0, 1, 2, 3

OBJECTIVES = {
    "alg-conn": ObjectiveKind.ALG_CONN,
    "alpha-index": ObjectiveKind.ALPHA_INDEX,
    "alpha-lambda2": ObjectiveKind.ALPHA_LAMBDA2,
    "alpha-runner-up": ObjectiveKind.ALPHA_INDEX_RUNNER_UP,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; 2 is reserved for failed verification
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _alpha(text: str) -> float:
    value = float(text)
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"alpha must lie in [0, 1], got {text}")
    return value


def _n_range(args) -> range:
    if args.n is not None:
        if args.n_min is not None or args.n_max is not None:
            raise UsageError("--n cannot be combined with --n-min/--n-max")
        return range(args.n, args.n + 1)
    if args.n_max is None:
        raise UsageError("give --n or --n-max")
    lo = args.n_min if args.n_min is not None else args.k + 1
    if lo > args.n_max:
        raise UsageError(f"empty range --n-min {lo} --n-max {args.n_max}")
    return range(lo, args.n_max + 1)


def cmd_generate(args) -> int:
    strings = (g6codec.encode(build_from_sequence(c, args.n)) for c in seqcore.enumerate_sequences(args.k, args.n))
    if args.out:
        count = g6codec.write_list(args.out, strings)
    else:
        count = 0
        for s in strings:
            sys.stdout.write(s + "\n")
            count += 1
    print(f"{count} graphs (k={args.k}, n={args.n})", file=sys.stderr)
    return EXIT_OK


def cmd_count(args) -> int:
    try:
        count = seqcore.count_closed_form(args.k, args.n).count
    except seqcore.OutOfValidatedRange:
        count = sum(1 for _ in seqcore.enumerate_sequences(args.k, args.n))
        print("closed form not validated here; counted by enumeration", file=sys.stderr)
    print(count)
    return EXIT_OK


def cmd_search(args) -> int:
    kind = OBJECTIVES[args.objective]
    if kind is ObjectiveKind.ALG_CONN:
        if args.alpha or args.all_alphas:
            raise UsageError("alg-conn takes no --alpha")
        alphas = [None]
    elif args.all_alphas:
        if args.alpha:
            raise UsageError("--alpha and --all-alphas are exclusive")
        alphas = list(extremal.TABLE_ALPHAS)
    elif args.alpha:
        alphas = args.alpha
    else:
        raise UsageError(f"{args.objective} needs --alpha or --all-alphas")
    if args.precision < 0:
        raise UsageError("--precision must be >= 0")
    objectives = [Objective(kind, Direction(args.direction), a) for a in alphas]
    records = extremal.sweep(
        args.k, _n_range(args), objectives, threads=args.threads, budget=args.budget
    )
    sep = "\t" if args.format == "tsv" else ","
    sys.stdout.write(extremal.format_table(records, sep=sep, precision=args.precision, header=not args.no_header))
    return EXIT_OK


def cmd_verify(args) -> int:
    lo = args.n_min if args.n_min is not None else args.k + 1
    if lo > args.n_max:
        raise UsageError(f"empty range --n-min {lo} --n-max {args.n_max}")
    alphas = args.alphas or list(extremal.TABLE_ALPHAS)
    report = extremal.verify_conjectures(
        args.k,
        range(lo, args.n_max + 1),
        alphas,
        lambda2_reading=args.lambda2_reading,
        threads=args.threads,
        budget=args.budget,
    )
    lines = report.lines()
    print(lines[0])
    for line in lines[1:]:
        if args.verbose or not line.startswith("ok"):
            print(line)
    return EXIT_OK if report.passed else EXIT_VERIFY


def _fmt(x: float) -> str:
    text = f"{x:.6f}"
    return "0.000000" if text == "-0.000000" else text


def cmd_spectrum(args) -> int:
    g = g6codec.decode(args.g6)
    kind = MatrixKind(args.matrix)
    if kind is MatrixKind.A_ALPHA and args.alpha is None:
        raise UsageError("--matrix a-alpha needs --alpha")
    if kind is not MatrixKind.A_ALPHA and args.alpha is not None:
        raise UsageError("--alpha only applies to --matrix a-alpha")
    for x in spectrum(g, kind, args.alpha).values:
        print(_fmt(x))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="kpaths", description="Enumerate k-path graphs and search their spectra.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", help="write every k-path of order n as graph6, one per line")
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--out", help="output file (default: stdout)")
    g.set_defaults(func=cmd_generate)

    c = sub.add_parser("count", help="number of k-paths of order n")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.set_defaults(func=cmd_count)

    s = sub.add_parser("search", help="extremal graphs for one objective")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n", type=int)
    s.add_argument("--n-min", type=int)
    s.add_argument("--n-max", type=int)
    s.add_argument("--objective", choices=sorted(OBJECTIVES), required=True)
    s.add_argument("--direction", choices=["max", "min"], default="max")
    s.add_argument("--alpha", type=_alpha, action="append", help="repeatable")
    s.add_argument("--all-alphas", action="store_true", help="alpha = 0.1, 0.2, ..., 0.9")
    s.add_argument("--format", choices=["csv", "tsv"], default="csv")
    s.add_argument("--precision", type=int, default=4)
    s.add_argument("--no-header", action="store_true")
    s.set_defaults(func=cmd_search)

    v = sub.add_parser("verify", help="check the conjectured extremal families")
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--n-min", type=int)
    v.add_argument("--n-max", type=int, required=True)
    v.add_argument("--alphas", type=_alpha, nargs="+")
    v.add_argument(
        "--lambda2-reading",
        choices=extremal.LAMBDA2_READINGS,
        default="runner-up",
        help="runner-up: alpha-index of the second-best graph (default); literal: max second eigenvalue",
    )
    v.add_argument("-v", "--verbose", action="store_true", help="print passing checks too")
    v.set_defaults(func=cmd_verify)

    for sp in (s, v):
        sp.add_argument("--threads", type=_positive, default=None)
        sp.add_argument("--budget", type=_positive, default=extremal.DEFAULT_BUDGET)

    e = sub.add_parser("spectrum", help="eigenvalues of one graph, ascending")
    e.add_argument("--g6", required=True)
    e.add_argument("--matrix", choices=[m.value for m in MatrixKind], required=True)
    e.add_argument("--alpha", type=_alpha)
    e.set_defaults(func=cmd_spectrum)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (BudgetExceeded, NoConvergence, OSError) as exc:
        print(f"kpaths: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (UsageError, ValueError) as exc:
        # bad orders, malformed graph6, out-of-range alpha
        print(f"kpaths: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        print(f"kpaths: internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
