"""Command-line front end.

Exit codes: 0 success, 1 law-check failure, 2 data or expression error,
64 usage error.
"""

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import kernels
from .algebra import INSTANCES, check, get_instance
from .errors import DomainError, MnesorError
from .expr import Env, evaluate, parse, simplify, unparse
from .fuzzyset import SampledFuzzySet, grid
from .grade import DEFAULT_K, DEFAULT_TOL, ComplementConfig
from .setfile import dumps_sets, load_sets

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_DATA = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _positive_float(text):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not v > 0 or v == float("inf"):
        raise argparse.ArgumentTypeError(f"must be a finite positive number, got {text}")
    return v


def _nonneg_float(text):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not v >= 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {text}")
    return v


def _domain(text):
    lo, sep, hi = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError(f"domain must look like lo:hi, got {text!r}")
    try:
        lo, hi = float(lo), float(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"domain bounds must be numbers, got {text!r}") from None
    if not lo < hi:
        raise argparse.ArgumentTypeError(f"domain needs lo < hi, got {text!r}")
    return lo, hi


def build_parser():
    p = _Parser(prog="mnesor", description="Fuzzy mnesor algebra toolkit.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def common(sp, k=True):
        sp.add_argument("--out", help="output path (default: standard output)")
        if k:
            sp.add_argument("--k", type=_positive_float, default=DEFAULT_K,
                            help=f"complement parameter (default {DEFAULT_K})")

    sp = sub.add_parser("eval", help="evaluate expressions against a set-definition file")
    sp.add_argument("--env", required=True, help="set-definition JSON file")
    sp.add_argument("-e", "--expr", action="append", required=True, help="expression (repeatable)")
    common(sp)

    sp = sub.add_parser("check", help="run the law checker on a built-in instance")
    sp.add_argument("instance_pos", nargs="?", metavar="INSTANCE",
                    help=f"one of {', '.join(INSTANCES)}")
    sp.add_argument("--instance", help="same as the positional argument")
    sp.add_argument("--cases", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=42)
    sp.add_argument("--tol", type=_nonneg_float, default=DEFAULT_TOL)
    common(sp)

    sp = sub.add_parser("simplify", help="print the simplified form of expressions")
    sp.add_argument("expr_pos", nargs="*", metavar="EXPR")
    sp.add_argument("-e", "--expr", action="append", default=[])
    common(sp, k=False)

    sp = sub.add_parser("plot", help="write membership curves as CSV (x,name,mu)")
    sp.add_argument("-e", "--expr", action="append", required=True,
                    help="expression, or @oneminus / @ck:<k> (repeatable)")
    sp.add_argument("--env", help="set-definition JSON file")
    sp.add_argument("--domain", type=_domain, help="plot domain lo:hi")
    sp.add_argument("--samples", type=int, help="grid points (default 300)")
    common(sp)
    return p


def _write(text, out):
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def cmd_eval(args):
    sets = load_sets(args.env)
    env = Env(sets, ComplementConfig(args.k))
    results = {text: evaluate(parse(text), env) for text in args.expr}
    _write(dumps_sets(results), args.out)
    return EXIT_OK


def cmd_check(args):
    if args.instance_pos and args.instance and args.instance_pos != args.instance:
        raise UsageError("check: conflicting instance names")
    name = args.instance_pos or args.instance
    if name is None:
        raise UsageError("check: an instance name is required")
    if name not in INSTANCES:
        raise UsageError(f"check: unknown instance {name!r} (choose from {', '.join(INSTANCES)})")
    if args.cases < 1:
        raise UsageError("check: --cases must be >= 1")
    report = check(get_instance(name, args.k), args.cases, args.seed, args.tol)
    _write(report.to_json(), args.out)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_simplify(args):
    texts = list(args.expr_pos) + list(args.expr)
    if not texts:
        raise UsageError("simplify: no expression given")
    lines = [unparse(simplify(parse(t))) for t in texts]
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _pseudo_curve(text, xs):
    if text == "@oneminus":
        f = lambda x: 1.0 - x
    elif text.startswith("@ck:"):
        try:
            cfg = ComplementConfig(float(text[4:]))
        except (ValueError, DomainError):
            raise DomainError(f"bad complement parameter in {text!r}") from None
        f = lambda x: kernels.to_linear(kernels.complement(kernels.to_log(x), cfg.k))
    else:
        raise DomainError(f"unknown pseudo-expression {text!r} (use @oneminus or @ck:<k>)")
    if xs[0] < 0.0 or xs[-1] > 1.0:
        raise DomainError(f"{text} needs a domain inside [0, 1]")
    return f(xs)


def _plot_grid(args):
    domain, samples = args.domain, args.samples
    if args.env and (domain is None or samples is None):
        carriers = {s.carrier for s in load_sets(args.env).values() if isinstance(s, SampledFuzzySet)}
        if len(carriers) == 1:
            _, lo, hi, n = carriers.pop()
            if domain is None:
                domain = (lo, hi)
                if samples is None:
                    samples = n
    if domain is None:
        domain = (0.0, 1.0)
    if samples is None:
        samples = 300
    return domain, samples


def cmd_plot(args):
    if args.samples is not None and args.samples < 2:
        raise UsageError("plot: --samples must be >= 2")
    (lo, hi), n = _plot_grid(args)
    xs = grid(lo, hi, n)
    env = None
    curves = []
    for text in args.expr:
        if text.startswith("@"):
            curves.append((text, _pseudo_curve(text, xs)))
            continue
        if env is None:
            sets = load_sets(args.env, grid=(lo, hi, n)) if args.env else {}
            env = Env(sets, ComplementConfig(args.k), carrier=("sampled", lo, hi, n))
        result = evaluate(parse(text), env)
        if not isinstance(result, SampledFuzzySet):
            raise DomainError(f"{text!r} is a discrete set; only sampled sets can be plotted")
        if result.carrier != ("sampled", lo, hi, n):
            raise DomainError(f"{text!r} is not on the plot grid [{lo}, {hi}] x {n}")
        curves.append((text, result.values))
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["x", "name", "mu"])
    for i, x in enumerate(xs):
        for name, mu in curves:
            w.writerow([f"{x:.12g}", name, f"{float(mu[i]):.9g}"])
    _write(buf.getvalue(), args.out)
    return EXIT_OK


COMMANDS = {"eval": cmd_eval, "check": cmd_check, "simplify": cmd_simplify, "plot": cmd_plot}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError(parser.format_usage().strip())
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MnesorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
