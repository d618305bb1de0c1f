"""Command line entry point.

Exit codes: 0 success, 1 a verification check failed, 2 usage, parse or
input error.  Results go to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import contextlib
import sys
from fractions import Fraction
from typing import List, Optional

from .config import ENV_VAR, LineConfig, load_config
from .core import JacquetError, Multisegment
from .criteria import casselman
from .expr import (
    format_label,
    format_signed,
    format_tensor,
    format_words,
    parse_expr,
    parse_points,
    parse_profile,
    parse_segment,
    parse_segments,
)
from .harness import InstanceWindow, run_suite
from .hopf import FilterSpec, cuspidal_jacquet, filter, mstar
from .structure import classify_square_integrable, decide_pair, tempered_product_class

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(JacquetError):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_window(spec: Optional[str], config: LineConfig) -> InstanceWindow:
    """``lo=-2,hi=2,step=1/2,points=3,factors=3,lines=rho:sigma``; every key optional."""
    kw = {}
    if spec:
        for item in spec.split(","):
            key, sep, value = item.partition("=")
            key, value = key.strip(), value.strip()
            if not sep:
                raise UsageError(f"window item {item!r} is not key=value")
            try:
                if key in ("lo", "hi", "step"):
                    kw[key] = Fraction(value)
                elif key == "points":
                    kw["max_segment_points"] = int(value)
                elif key == "factors":
                    kw["max_factors"] = int(value)
                elif key == "lines":
                    kw["lines"] = tuple(config[i] for i in value.split(":"))
                else:
                    raise UsageError(f"unknown window key {key!r}")
            except (ValueError, ZeroDivisionError):
                raise UsageError(f"bad value for window key {key!r}: {value!r}") from None
    if "lines" not in kw:
        kw["lines"] = tuple(config.values())
    try:
        return InstanceWindow(**kw)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _bare(config: LineConfig) -> bool:
    return len(config) == 1


def cmd_mstar(args, config, out):
    out.extend(format_tensor(mstar(parse_expr(args.expr, config))))


def cmd_jacquet(args, config, out):
    x = parse_expr(args.expr, config)
    if args.level == "one":
        out.extend(format_tensor(mstar(x)))
    else:
        out.extend(format_words(cuspidal_jacquet(x), bare=_bare(config)))


def cmd_filter(args, config, out):
    x = parse_expr(args.expr, config)
    if args.kind in ("left", "right"):
        if args.label is None:
            raise UsageError(f"--kind {args.kind} needs --label")
        label = parse_expr(args.label, config)
        if len(label) != 1 or next(iter(label.terms.values())) != 1:
            raise UsageError("--label must be a single basis label")
        spec = FilterSpec(args.kind + "-equals", next(iter(label)))
    elif args.kind == "supp":
        if args.profile is None:
            raise UsageError("--kind supp needs --profile")
        spec = FilterSpec.supp_profile(*parse_profile(args.profile, config))
    else:
        spec = FilterSpec.bottom()
    out.extend(format_tensor(filter(x, spec)))


def cmd_decide(args, config, out):
    d = decide_pair(parse_segment(args.seg1, config), parse_segment(args.seg2, config))
    if d.irreducible:
        out.append(f"irreducible: {format_label(d.class_label)}")
    else:
        out.append(f"length-two: L = {format_signed(d.langlands_class)}; "
                   f"other = {format_label(d.other_summand)}")


def cmd_classify_si(args, config, out):
    res = classify_square_integrable(parse_points(args.points, config), config)
    if res.segment is not None:
        out.append(f"square-integrable: {format_label(Multisegment([res.segment]))}")
    elif res.essentially_only:
        out.append(f"none (essentially square integrable only: "
                   f"{format_label(Multisegment([res.candidate]))})")
    else:
        out.append("none")


def cmd_tempered(args, config, out):
    label = tempered_product_class(parse_segments(args.segments, config), config)
    out.append(f"irreducible: {format_label(label)}")


def cmd_casselman(args, config, out):
    v = casselman(parse_points(args.word, config))
    b = lambda flag: "true" if flag else "false"  # noqa: E731
    out.extend([
        f"raw_sum = {v.raw_sum}",
        f"weighted_sum = {v.weighted_sum}",
        f"sum_zero = {b(v.sum_zero)}",
        f"partials_positive = {b(v.partials_positive)}",
        f"square_integrable = {b(v.square_integrable)}",
        f"essentially = {b(v.essentially)}",
    ])


def cmd_verify(args, config, out):
    names = [n.strip() for n in args.suite.split(",") if n.strip()]
    try:
        reports = run_suite(names, parse_window(args.window, config))
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    ok = True
    for r in reports:
        out.append(r.summary())
        for f in r.failures:
            out.append(f"  instance: {f.instance}")
            out.append(f"    expected: {f.expected}")
            out.append(f"    actual:   {f.actual}")
        ok = ok and r.passed
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_enumerate(args, config, out):
    for m in parse_window(args.window, config).labels():
        out.append(format_label(m))


def build_parser() -> argparse.ArgumentParser:
    p = _ArgumentParser(prog="jacquet", description=__doc__.splitlines()[0])
    p.add_argument("--config", help=f"line configuration file (default: ${ENV_VAR})")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    s = sub.add_parser("mstar", help="comultiplication m*")
    s.add_argument("expr")
    s.set_defaults(func=cmd_mstar)

    s = sub.add_parser("jacquet", help="Jacquet module at level one (m*) or cuspidal level")
    s.add_argument("--level", choices=("one", "cuspidal"), default="cuspidal")
    s.add_argument("expr")
    s.set_defaults(func=cmd_jacquet)

    s = sub.add_parser("filter", help="filtered parts of m*")
    s.add_argument("--kind", choices=("bottom", "left", "right", "supp"), required=True)
    s.add_argument("--label")
    s.add_argument("--profile", help="point multisets separated by ';'")
    s.add_argument("expr")
    s.set_defaults(func=cmd_filter)

    s = sub.add_parser("decide", help="irreducibility of delta(a) x delta(b)")
    s.add_argument("seg1")
    s.add_argument("seg2")
    s.set_defaults(func=cmd_decide)

    s = sub.add_parser("classify-si", help="square-integrable delta with the given support")
    s.add_argument("points")
    s.set_defaults(func=cmd_classify_si)

    s = sub.add_parser("tempered", help="label of a product of unitary delta's")
    s.add_argument("segments", help="segments separated by ';'")
    s.set_defaults(func=cmd_tempered)

    s = sub.add_parser("casselman", help="Casselman criterion on a cuspidal word")
    s.add_argument("word")
    s.set_defaults(func=cmd_casselman)

    s = sub.add_parser("verify", help="run verification checks")
    s.add_argument("--suite", default="all", help="comma-separated check names, or all")
    s.add_argument("--window", help="lo=,hi=,step=,points=,factors=,lines=a:b")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("enumerate", help="list the basis labels of a window")
    s.add_argument("--window", required=True)
    s.set_defaults(func=cmd_enumerate)
    return p


def main(argv: Optional[List[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    out: List[str] = []
    try:
        with contextlib.redirect_stdout(stdout):  # --help honours the given stream
            args = build_parser().parse_args(argv)
        config = load_config(args.config)
        code = args.func(args, config, out) or EXIT_OK
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    except JacquetError as exc:
        print(f"jacquet: error: {exc}", file=stderr)
        return EXIT_USAGE
    except Exception as exc:  # exit-code contract is total
        print(f"jacquet: internal error: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_USAGE
    for line in out:
        print(line, file=stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
