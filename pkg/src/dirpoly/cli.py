"""Command-line front end.

Subcommands operate on polynomial expressions ("4^y + 4") and on two small
file formats:

  bundle file        header "label,fibre", one outcome per row, '#' comments
                     and blank lines ignored
  distribution file  header "label,probability", probabilities written as
                     exact fractions "p/q" or integers (floats are rejected)

Output is human-readable by default; ``--format structured`` emits a single
JSON document (floats round-trip exactly; +infinity is emitted as the JSON
token Infinity).  Exit codes: 0 success or passed check, 1 failed check,
2 parse or validation error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .core import LabelledBundle
from .distributions import (
    RationalDistribution,
    from_rational_distribution,
    to_distribution,
)
from .expr import ParseError, format_poly, parse
from .homs import hom_count, hom_count_over_base
from .measures import (
    DEFAULT_TOL,
    check_cross_rectangle_area,
    check_rectangle_area,
    cross_measures,
    measures,
)

_NAT_RE = re.compile(r"\d+")
_FRACTION_RE = re.compile(r"\d+(/\d+)?")


def _fmt(x: float) -> str:
    """Decimal approximation to 12 significant digits."""
    return f"{x:.12g}"


def _emit(document: dict) -> None:
    print(json.dumps(document))


def _parse_nat(text: str, what: str) -> int:
    if not _NAT_RE.fullmatch(text):
        raise ValueError(f"{what} must be a natural number, got {text!r}")
    return int(text)


def _data_rows(path: str, header: tuple[str, str]) -> list[tuple[str, str, int]]:
    """Rows of a two-column comma-separated file, after the expected header."""
    rows = []
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            fields = [field.strip() for field in line.split(",")]
            if len(fields) != 2:
                raise ValueError(f"{path}:{lineno}: expected 2 comma-separated fields")
            rows.append((fields[0], fields[1], lineno))
    if not rows or (rows[0][0], rows[0][1]) != header:
        raise ValueError(f"{path}: first row must be the header {','.join(header)!r}")
    return rows[1:]


def read_bundle(path: str) -> LabelledBundle:
    fibres = []
    for label, size_text, lineno in _data_rows(path, ("label", "fibre")):
        if not label:
            raise ValueError(f"{path}:{lineno}: empty label")
        if not _NAT_RE.fullmatch(size_text):
            raise ValueError(
                f"{path}:{lineno}: fibre size must be a natural number, got {size_text!r}"
            )
        fibres.append((label, int(size_text)))
    return LabelledBundle(tuple(fibres))


def read_distribution(path: str) -> RationalDistribution:
    entries = []
    for label, prob_text, lineno in _data_rows(path, ("label", "probability")):
        if not label:
            raise ValueError(f"{path}:{lineno}: empty label")
        if not _FRACTION_RE.fullmatch(prob_text):
            raise ValueError(
                f"{path}:{lineno}: probability must be a fraction p/q or an integer,"
                f" got {prob_text!r}"
            )
        entries.append((label, Fraction(prob_text)))
    return RationalDistribution(tuple(entries))


def bundle_document(bundle: LabelledBundle) -> str:
    lines = ["label,fibre"]
    lines.extend(f"{label},{size}" for label, size in bundle.fibres)
    return "\n".join(lines)


def _cmd_eval(args) -> int:
    value = parse(args.expr)(_parse_nat(args.n, "the evaluation point"))
    if args.format == "structured":
        _emit({"value": value})
    else:
        print(value)
    return 0


def _cmd_measures(args) -> int:
    d = parse(args.expr)
    m = measures(d)
    if args.format == "structured":
        _emit({
            "polynomial": format_poly(d),
            "area": m.area,
            "powerProduct": m.power_product,
            "width": m.width,
            "entropy": m.entropy,
            "length": m.length,
        })
    else:
        print(f"polynomial: {format_poly(d)}")
        print(f"area: {m.area}")
        print(f"powerProduct: {m.power_product}")
        print(f"width: {_fmt(m.width)}")
        print(f"entropy: {_fmt(m.entropy)}")
        print(f"length: {_fmt(m.length)}")
    return 0


def _cmd_check(args) -> int:
    d = parse(args.expr)
    report = check_rectangle_area(d, tol=args.tol)
    m = report.measures
    status = "pass" if report.passed else "fail"
    if args.format == "structured":
        _emit({
            "polynomial": format_poly(d),
            "area": m.area,
            "powerProduct": m.power_product,
            "width": m.width,
            "entropy": m.entropy,
            "length": m.length,
            "lengthTimesWidth": report.product,
            "floatError": report.float_error,
            "logError": report.log_error,
            "tol": report.tol,
            "status": status,
        })
    else:
        print(f"polynomial: {format_poly(d)}")
        print(f"area: {m.area}")
        print(f"length*width: {_fmt(report.product)}")
        print(f"floatError: {_fmt(report.float_error)} (bound {_fmt(report.float_bound)})")
        print(f"logError: {_fmt(report.log_error)} (bound {_fmt(report.log_bound)})")
        print(f"status: {status}")
    return 0 if report.passed else 1


def _cmd_cross(args) -> int:
    bd = read_bundle(args.data)
    be = read_bundle(args.model)
    report = check_cross_rectangle_area(bd, be, tol=args.tol)
    cm = report.cross
    if args.format == "structured":
        _emit({
            "crossEntropy": cm.cross_entropy,
            "crossArea": cm.cross_area,
            "crossWidth": cm.cross_width,
            "crossLength": cm.cross_length,
            "kl": cm.kl,
            "tol": report.tol,
            "status": report.status,
        })
    else:
        print(f"crossEntropy: {_fmt(cm.cross_entropy)}")
        print(f"crossArea: {cm.cross_area}")
        print(f"crossWidth: {_fmt(cm.cross_width)}")
        print(f"crossLength: {_fmt(cm.cross_length)}")
        print(f"kl: {_fmt(cm.kl)}")
        print(f"status: {report.status}")
    return 0 if report.status in ("pass", "degenerate") else 1


def _cmd_kl(args) -> int:
    bd = read_bundle(args.data)
    be = read_bundle(args.model)
    value = cross_measures(bd, be).kl
    if args.format == "structured":
        _emit({"kl": value})
    else:
        print(f"kl: {_fmt(value)}")
    return 0


def _cmd_hom_count(args) -> int:
    if args.over_base:
        count = hom_count_over_base(read_bundle(args.a), read_bundle(args.b))
    else:
        count = hom_count(parse(args.a), parse(args.b))
    if args.format == "structured":
        _emit({"count": count})
    else:
        print(count)
    return 0


def _cmd_from_dist(args) -> int:
    dist = read_distribution(args.csv)
    bundle = from_rational_distribution(dist)
    poly_text = format_poly(bundle.to_poly())
    document = bundle_document(bundle)
    if args.format == "structured":
        _emit({
            "bundle": [{"label": l, "fibre": s} for l, s in bundle.fibres],
            "total": bundle.num_draws,
            "polynomial": poly_text,
        })
        if args.output:
            with open(args.output, "w", encoding="utf-8") as f:
                f.write(document + "\n")
        return 0
    if args.output:
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(document + "\n")
        print(f"wrote {args.output}")
        print(f"polynomial: {poly_text}")
        print(f"total: {bundle.num_draws}")
    else:
        # Stdout stays a valid bundle file; the extras ride along as comments.
        print(document)
        print(f"# polynomial: {poly_text}")
        print(f"# total: {bundle.num_draws}")
    return 0


def _cmd_to_dist(args) -> int:
    dist = to_distribution(read_bundle(args.bundle))
    if args.format == "structured":
        _emit({
            "distribution": [
                {"label": label, "probability": str(p)} for label, p in dist.entries
            ],
        })
    else:
        print("label,probability")
        for label, p in dist.entries:
            print(f"{label},{p}")
    return 0


def _cmd_arith(args) -> int:
    a = parse(args.a)
    b = parse(args.b)
    result = a + b if args.op == "add" else a * b
    if args.format == "structured":
        _emit({"polynomial": format_poly(result)})
    else:
        print(format_poly(result))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dirpoly",
        description="Exact Dirichlet polynomial calculator: rig arithmetic,"
        " entropy/length/width measures, hom counts, and distributions.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=["human", "structured"], default="human",
        help="output style (structured = one JSON document)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate an expression at a natural number")
    p.add_argument("expr")
    p.add_argument("n")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("measures", parents=[common], help="area, power product, width, entropy, length")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_measures)

    p = sub.add_parser("check", parents=[common], help="verify area == length * width")
    p.add_argument("expr")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("cross", parents=[common], help="cross measures of two bundle files and the cross rectangle-area check")
    p.add_argument("data", help="bundle file of the data polynomial")
    p.add_argument("model", help="bundle file of the model polynomial")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.set_defaults(func=_cmd_cross)

    p = sub.add_parser("kl", parents=[common], help="Kullback-Leibler divergence of two bundle files")
    p.add_argument("data")
    p.add_argument("model")
    p.set_defaults(func=_cmd_kl)

    p = sub.add_parser("hom-count", parents=[common], help="number of morphisms between two polynomials")
    p.add_argument("--over-base", action="store_true",
                   help="count outcome-fixing morphisms between two bundle files instead")
    p.add_argument("a", help="expression, or bundle file with --over-base")
    p.add_argument("b", help="expression, or bundle file with --over-base")
    p.set_defaults(func=_cmd_hom_count)

    p = sub.add_parser("from-dist", parents=[common], help="realise a distribution file as a minimal bundle")
    p.add_argument("csv", help="distribution file (label,probability)")
    p.add_argument("-o", "--output", help="write the bundle file here instead of stdout")
    p.set_defaults(func=_cmd_from_dist)

    p = sub.add_parser("to-dist", parents=[common], help="empirical distribution of a bundle file")
    p.add_argument("bundle")
    p.set_defaults(func=_cmd_to_dist)

    p = sub.add_parser("arith", parents=[common], help="add or multiply two expressions")
    p.add_argument("op", choices=["add", "mul"])
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=_cmd_arith)

    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for usage errors; keep the contract.
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
