"""Command-line interface: ``sospart <subcommand> ...``.

Exit status is 0 on success, 1 when a verification oracle reports a failure
and 2 on malformed input.
"""

import argparse
import sys
from fractions import Fraction

from .exact import format_rational, parse_rational, unit
from .farey import FareyInterval, farey_sequence
from .geometry import domain_of, partition, refine, strip_regions
from .serialize import domain_to_record, dumps, partition_to_dict, strip_to_dict
from .sos import SosPerm, count_sos, gap_profile, sos_orbit, sos_permutation, sos_recurrence
from .svg import render_svg
from .verify import oracle_bijection_check, oracle_partition_check, oracle_three_gaps


class UsageError(ValueError):
    pass


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def _unit_rational(text: str) -> Fraction:
    try:
        return unit(parse_rational(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _interval(text: str) -> tuple[Fraction, Fraction]:
    try:
        lo, hi = text.split(",")
        return parse_rational(lo), parse_rational(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a/b,c/d but got {text!r}") from None


def _perm(text: str) -> SosPerm:
    try:
        return SosPerm.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sospart",
        description="Sos permutations of f(x) = alpha*x + beta mod 1 and their domains.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("perm", help="Sos permutation for one (alpha, beta)")
    p.add_argument("--alpha", type=_unit_rational, required=True)
    p.add_argument("--beta", type=_unit_rational, required=True)
    p.add_argument("--n", type=_positive, required=True)

    p = sub.add_parser("orbit", help="the n+1 permutations for a fixed alpha")
    p.add_argument("--alpha", type=_unit_rational, required=True)
    p.add_argument("--n", type=_positive, required=True)

    p = sub.add_parser("farey", help="Farey sequence F^(n)")
    p.add_argument("--n", type=_positive, required=True)

    p = sub.add_parser("recurrence", help="beta = 0 permutation of a Farey interval")
    p.add_argument("--interval", type=_interval, required=True)
    p.add_argument("--n", type=_positive, required=True)

    p = sub.add_parser("domain", help="domain of a Sos permutation as JSON")
    p.add_argument("--perm", type=_perm, required=True)

    p = sub.add_parser("partition", help="all domains for size n")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--format", choices=["json", "svg"], default="json")
    p.add_argument("--width", type=_positive, default=600, help="SVG width in pixels")
    p.add_argument("--label-threshold", type=_positive, default=40)
    p.add_argument("--out", help="write to this file instead of stdout")
    p.add_argument("--figure", help="also save a matplotlib rendering (png, pdf, ...)")

    p = sub.add_parser("strip", help="domains over one Farey interval and their areas")
    p.add_argument("--interval", type=_interval, required=True)
    p.add_argument("--n", type=_positive, required=True)

    p = sub.add_parser("gaps", help="sorted values and gaps on the circle")
    p.add_argument("--alpha", type=_unit_rational, required=True)
    p.add_argument("--beta", type=_unit_rational, required=True)
    p.add_argument("--n", type=_positive, required=True)

    p = sub.add_parser("refine", help="children of a domain at size n+1")
    p.add_argument("--perm", type=_perm, required=True)

    p = sub.add_parser("count", help="number of Sos permutations of {0..n}")
    p.add_argument("--n", type=_positive, required=True)

    p = sub.add_parser("verify", help="run the brute-force oracles")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--grid", type=_positive, default=None)
    p.add_argument("--trials", type=_positive, default=1000)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _emit(text: str, out, path=None):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)


def _run(args, out) -> int:
    cmd = args.command
    if cmd == "perm":
        out.write(f"{sos_permutation(args.alpha, args.beta, args.n)}\n")
    elif cmd == "orbit":
        for perm in sos_orbit(args.alpha, args.n):
            out.write(f"{perm}\n")
    elif cmd == "farey":
        for x in farey_sequence(args.n):
            out.write(f"{x.numerator}/{x.denominator}\n")
    elif cmd == "recurrence":
        iv = FareyInterval(*args.interval, args.n)
        out.write(f"{sos_recurrence(iv, args.n)}\n")
    elif cmd == "domain":
        out.write(dumps(domain_to_record(domain_of(args.perm))))
    elif cmd == "partition":
        part = partition(args.n)
        if args.format == "json":
            text = dumps(partition_to_dict(part))
        else:
            text = render_svg(part, args.width, args.label_threshold)
        _emit(text, out, args.out)
        if args.figure:
            from .plotting import plot_partition

            plot_partition(part, args.figure, args.label_threshold)
    elif cmd == "strip":
        iv = FareyInterval(*args.interval, args.n)
        out.write(dumps(strip_to_dict(iv, args.n, strip_regions(iv, args.n))))
    elif cmd == "gaps":
        prof = gap_profile(args.alpha, args.beta, args.n)
        out.write("values: " + " ".join(map(format_rational, prof.sorted_values)) + "\n")
        out.write("gaps: " + " ".join(map(format_rational, prof.gaps)) + "\n")
        out.write("distinct: " + " ".join(map(format_rational, sorted(prof.distinct_gaps))) + "\n")
    elif cmd == "refine":
        for perm in refine(args.perm):
            out.write(f"{perm}\n")
    elif cmd == "count":
        out.write(f"{count_sos(args.n)}\n")
    elif cmd == "verify":
        n = args.n
        grid = args.grid if args.grid is not None else max(16, 2 * n * n)
        reports = [
            oracle_partition_check(n, grid),
            oracle_bijection_check(n, args.seed),
            oracle_three_gaps(n, args.trials, args.seed),
        ]
        out.write(dumps([r.to_dict() for r in reports]))
        return 0 if all(r.passed for r in reports) else 1
    return 0


def cli_main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _run(args, out)
    except (ValueError, ZeroDivisionError) as exc:
        parser.print_usage(sys.stderr)
        print(f"sospart {args.command}: error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
