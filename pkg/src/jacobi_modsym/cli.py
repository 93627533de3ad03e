"""Command line front end: ``jacobi-modsym {compute,pairs,lift,verify}``."""

import argparse
import logging
import re
import sys
import warnings

from .jacobi import NORMALIZATIONS, AdmissiblePair, default_pair, find_pairs
from .lift import LiftError, eigen_consistency, shimura_lift
from .modsym import SymbolParseError, check_cuspidal, read_symbol
from .qf import GenusSearchError
from .table import TableFormatError, batch_table, compare_tables, read_table

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_IO, EXIT_INTERNAL = 0, 1, 2, 3, 4

log = logging.getLogger("jacobi_modsym")


class CliError(Exception):
    def __init__(self, code, reason, message):
        super().__init__(message)
        self.code = code
        self.reason = reason


def _pair_arg(text):
    try:
        return AdmissiblePair.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _write(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(path, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError(EXIT_IO, "io", "cannot write %s: %s" % (path, exc.strerror)) from None


def _load_symbol(path):
    try:
        return read_symbol(path)
    except OSError as exc:
        raise CliError(EXIT_IO, "io", "cannot read %s: %s" % (path, exc.strerror)) from None
    except SymbolParseError as exc:
        raise CliError(EXIT_USAGE, "parse", "%s: %s" % (path, exc)) from None
    except ValueError as exc:
        raise CliError(EXIT_USAGE, "parse", "%s: %s" % (path, exc)) from None


def _load_table(path):
    try:
        return read_table(path)
    except OSError as exc:
        raise CliError(EXIT_IO, "io", "cannot read %s: %s" % (path, exc.strerror)) from None
    except (TableFormatError, ValueError) as exc:
        raise CliError(EXIT_USAGE, "parse", "%s: %s" % (path, exc)) from None


def _check_pair(pair, m, eps):
    try:
        pair.check(m, eps)
    except ValueError as exc:
        raise CliError(EXIT_USAGE, "pair", "%s is not admissible for m=%d eps=%+d: %s" % (pair, m, eps, exc)) from None


def cmd_compute(args):
    sigma = _load_symbol(args.symbol)
    if args.pair is None:
        pair = default_pair(sigma.level, sigma.sign, args.allow_d0_one)
    else:
        pair = args.pair
        _check_pair(pair, sigma.level, sigma.sign)
        if pair.D0 == 1 and not args.allow_d0_one:
            raise CliError(EXIT_USAGE, "pair", "D0=1 requires --allow-d0-one")
    if args.dmax < 1:
        raise CliError(EXIT_USAGE, "usage", "--dmax must be positive")
    if args.workers < 1:
        raise CliError(EXIT_USAGE, "usage", "--workers must be positive")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        cusp_ok = check_cuspidal(sigma)
    for w in caught:
        log.warning("%s", w.message)
    if cusp_ok is False:
        log.warning("symbol is not cuspidal: boundary does not vanish modulo Gamma_0(%d)", sigma.level)
    table = batch_table(sigma, pair, args.dmax, workers=args.workers, fill_na=args.fill_na,
                        normalize=args.normalize, include_one=args.allow_d0_one)
    _write(table.to_tsv(), args.out)
    return EXIT_OK


def cmd_pairs(args):
    if args.m < 1 or args.count < 1:
        raise CliError(EXIT_USAGE, "usage", "m and --count must be positive")
    for pair in find_pairs(args.m, args.eps, args.count, args.allow_d0_one):
        print("%d\t%d" % (pair.D0, pair.r0))
    return EXIT_OK


def cmd_lift(args):
    table = _load_table(args.table)
    pair = args.pair or table.pair
    _check_pair(pair, table.m, table.eps)
    try:
        expansion = shimura_lift(table, pair, args.nmax)
    except LiftError as exc:
        raise CliError(EXIT_USAGE, "coverage", str(exc)) from None
    report = eigen_consistency(expansion, table.k, table.m)
    text = expansion.to_tsv()
    text += "# checks=%d violations=%d %s\n" % (report.checks, len(report.violations), "PASS" if report else "FAIL")
    for what, got, want in report.violations:
        text += "# violation %s: got %s, expected %s\n" % (what, got, want)
    if report.note:
        text += "# %s\n" % report.note
    _write(text, args.out)
    return EXIT_OK if report else EXIT_MISMATCH


def cmd_verify(args):
    ours = _load_table(args.table)
    ref = _load_table(args.fixture)
    try:
        res = compare_tables(ours, ref, up_to_scalar=args.up_to_scalar)
    except ValueError as exc:
        raise CliError(EXIT_USAGE, "usage", str(exc)) from None
    print(res.summary())
    return EXIT_OK if res.ok else EXIT_MISMATCH


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-4,12" through as a value rather than an option
        self._negative_number_matcher = re.compile(r"^-\d+(,\d+)?$")

    def error(self, message):
        self.exit(EXIT_USAGE, "error: usage: %s\n" % message)


def build_parser():
    parser = _Parser(prog="jacobi-modsym", description="Jacobi form coefficients from modular symbols")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute a coefficient table")
    p.add_argument("--symbol", required=True, help="symbol file")
    p.add_argument("--pair", type=_pair_arg, help="admissible pair D0,r0 (default: smallest)")
    p.add_argument("--dmax", type=int, required=True, help="largest |D|")
    p.add_argument("--out", help="output TSV (default stdout)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--allow-d0-one", action="store_true", help="allow D0 = 1")
    p.add_argument("--fill-na", action="store_true", help="fill NA entries through a calibrated fallback pair")
    p.add_argument("--normalize", choices=NORMALIZATIONS, default="primitive")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("pairs", help="list admissible pairs")
    p.add_argument("m", type=int)
    p.add_argument("eps", type=int, choices=(-1, 1))
    p.add_argument("--count", type=int, default=1, help="number of discriminants")
    p.add_argument("--allow-d0-one", action="store_true")
    p.set_defaults(func=cmd_pairs)

    p = sub.add_parser("lift", help="lift a table to a q-expansion and check it")
    p.add_argument("table")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--pair", type=_pair_arg, help="lift pair (default: the table's pair)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("verify", help="compare a table with a fixture")
    p.add_argument("table")
    p.add_argument("fixture")
    p.add_argument("--up-to-scalar", action="store_true", help="allow one global rational factor")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except CliError as exc:
        print("error: %s: %s" % (exc.reason, exc), file=sys.stderr)
        return exc.code
    except GenusSearchError as exc:
        print("error: internal: %s" % exc, file=sys.stderr)
        return EXIT_INTERNAL
    except (AssertionError, ArithmeticError) as exc:
        print("error: internal: %s" % exc, file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
