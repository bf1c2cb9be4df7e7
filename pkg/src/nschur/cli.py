"""Command-line front end.

Four commands: ``compute`` (an n-Schur function), ``enumerate`` (index
sequences by weight), ``verify`` (the determinant-vs-expansion identity on
a point/series pair or on random instances), ``tau-expand`` (a coefficient
sum over a supplied series).  All output is deterministic; exit codes are
0 pass, 1 verification failure, 2 usage/parse error, 3 domain error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .errors import (
    DenominatorNotUnit,
    InsufficientDegree,
    MissingAssignment,
    NonExactDivision,
    NotStabilized,
    SingularConstantTerm,
    TruncationTooSmall,
)
from .grassmann import FinitePoint, SeriesMatrix, verify_expansion
from .kp import coeffs_from_json, exponential_series, symbolic_times, tau_quotient_expansion
from .partitions import (
    MayaSequence,
    parse_maya,
    parse_partition,
    partition_text,
    sequences_of_weight,
)
from .schur import n_schur, n_schur_at, truncated_matrix

DOMAIN_ERRORS = (
    TruncationTooSmall,
    SingularConstantTerm,
    NotStabilized,
    InsufficientDegree,
    DenominatorNotUnit,
    NonExactDivision,
    MissingAssignment,
    ZeroDivisionError,
)


class UsageError(Exception):
    pass


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _dump(data) -> str:
    return json.dumps(data, indent=2)


def _render_rational(value, fmt: str) -> str:
    if fmt == "json":
        if isinstance(value, Fraction):
            return _dump({"value": str(value)})
        return _dump(value.to_json_dict())
    if fmt == "latex":
        if isinstance(value, Fraction):
            return str(value)
        return value.latex()
    return str(value)


def _parse_sequence(args) -> MayaSequence:
    if args.maya is not None:
        return parse_maya(args.maya)
    if args.partition is not None:
        return MayaSequence.from_partition(parse_partition(args.partition))
    raise UsageError("one of --partition or --maya is required")


def cmd_compute(args) -> int:
    S = _parse_sequence(args)
    if args.matrix:
        N = args.truncation if args.truncation is not None else S.min_truncation(args.block_size)
        print(_dump(truncated_matrix(S, args.block_size, N).to_json()))
        return 0
    if args.truncation is not None:
        value = n_schur_at(S, args.block_size, args.truncation)
    else:
        value = n_schur(S, args.block_size)
    print(_render_rational(value, args.format))
    return 0


def cmd_enumerate(args) -> int:
    if args.weight < 0:
        raise UsageError(f"weight must be >= 0, got {args.weight}")
    sequences = sequences_of_weight(args.weight)
    if args.format == "json":
        print(
            _dump(
                {
                    "weight": args.weight,
                    "count": len(sequences),
                    "sequences": [
                        {"partition": partition_text(S.to_partition()), "maya": str(S)}
                        for S in sequences
                    ],
                }
            )
        )
    else:
        for S in sequences:
            parts = partition_text(S.to_partition())
            print(f"{parts if parts else '∅'} / {S}")
    return 0


def _print_report(report, fmt: str) -> None:
    if fmt == "json":
        print(_dump(report.to_json_dict()))
        return
    print(f"lhs = {report.lhs}")
    print(f"rhs = {report.rhs}")
    print(f"support = {len(report.support)} sequences")
    print(f"T_used = {report.T_used}")
    print(f"stabilized = {'true' if report.stabilized else 'false'}")
    print(f"pass = {'true' if report.passed else 'false'}")


def _random_fraction(rng, bound=9, nonzero=False) -> Fraction:
    while True:
        value = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if value or not nonzero:
            return value


def _random_instance(rng, n, d, r, K):
    while True:
        rows = tuple(
            tuple(_random_fraction(rng) for _ in range(r)) for _ in range(d + r)
        )
        try:
            W = FinitePoint(n, d, r, rows)
            break
        except ValueError:
            continue
    while True:
        coeffs = tuple(
            tuple(tuple(_random_fraction(rng) for _ in range(n)) for _ in range(n))
            for _ in range(K + 1)
        )
        g = SeriesMatrix(n, K, coeffs)
        if g.h0_det():
            return g, W


def cmd_verify(args) -> int:
    if args.random is not None:
        if args.random < 1:
            raise UsageError("--random needs a positive instance count")
        rng = random.Random(args.seed)
        failures = 0
        for idx in range(args.random):
            g, W = _random_instance(rng, args.block_size, args.depth, args.width, args.degree)
            report = verify_expansion(g, W)
            status = "pass" if report.passed else "FAIL"
            print(
                f"instance {idx}: {status} (lhs = {report.lhs}, support = {len(report.support)}, T = {report.T_used})"
            )
            if not report.passed:
                failures += 1
        print(f"{args.random - failures}/{args.random} instances passed")
        return 0 if failures == 0 else 1
    if not args.point or not args.series:
        raise UsageError("verify needs --point and --series files (or --random)")
    W = FinitePoint.from_json_dict(_load_json(args.point), args.max_denominator)
    g = SeriesMatrix.from_json_dict(_load_json(args.series), args.max_denominator)
    report = verify_expansion(g, W)
    _print_report(report, args.format)
    return 0 if report.passed else 1


def _load_series(path: str, max_denominator) -> SeriesMatrix:
    data = _load_json(path)
    if "exp" in data:
        spec = data["exp"]
        names = spec.get("times", [])
        for idx, name in enumerate(names, start=1):
            if name != f"t{idx}":
                raise UsageError(f"time names must be t1, t2, ... in order, got {name!r}")
        return exponential_series(symbolic_times(len(names)), int(spec["K"]))
    return SeriesMatrix.from_json_dict(data, max_denominator)


def cmd_tau_expand(args) -> int:
    series = _load_series(args.psi, args.max_denominator)
    if args.degree_limit is not None:
        if args.degree_limit < 0:
            raise UsageError("--degree-limit must be >= 0")
        if args.degree_limit < series.K:
            series = SeriesMatrix(
                series.n, args.degree_limit, series.coeffs[: args.degree_limit + 1]
            )
    coeffs = coeffs_from_json(_load_json(args.coeffs), args.max_denominator)
    value = tau_quotient_expansion(series, coeffs)
    print(_render_rational(value, args.format))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nschur",
        description="Exact n-Schur functions, Pluecker coordinates and tau-quotient expansions.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json", "latex"), default="text",
        help="output format (default: text)",
    )
    common.add_argument(
        "--seed", type=int, default=0,
        help="seed for randomized self-test modes (verify --random)",
    )
    common.add_argument(
        "--max-denominator", type=int, default=None,
        help="reject input rationals with larger denominators",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="print an n-Schur function")
    p.add_argument("-n", "--block-size", type=int, required=True)
    p.add_argument("--partition", help='partition syntax, e.g. "2,1"; "" is empty')
    p.add_argument("--maya", help='prefix syntax, e.g. --maya="[-2,1]"')
    p.add_argument("-N", "--truncation", type=int, default=None,
                   help="explicit truncation level (default: minimal)")
    p.add_argument("--matrix", action="store_true",
                   help="print the truncated matrix as a JSON array of polynomial JSON")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("enumerate", parents=[common], help="list index sequences of a weight")
    p.add_argument("--weight", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common],
                       help="check the determinant-vs-expansion identity")
    p.add_argument("--point", help="FinitePoint JSON file")
    p.add_argument("--series", help="SeriesMatrix JSON file")
    p.add_argument("--random", type=int, default=None,
                   help="verify this many random numeric instances instead")
    p.add_argument("-n", "--block-size", type=int, default=1, help="block size for --random")
    p.add_argument("-d", "--depth", type=int, default=2, help="depth for --random")
    p.add_argument("-r", "--width", type=int, default=2, help="width for --random")
    p.add_argument("-K", "--degree", type=int, default=2, help="series degree for --random")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tau-expand", parents=[common],
                       help="expand a coefficient sum over a series")
    p.add_argument("--psi", required=True,
                   help='series JSON file, or {"exp": {"times": ["t1", ...], "K": k}}')
    p.add_argument("--coeffs", required=True, help="coefficient map JSON file")
    p.add_argument("--degree-limit", type=int, default=None,
                   help="truncate the series to this z-degree before expanding")
    p.set_defaults(func=cmd_tau_expand)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        if isinstance(exc, DOMAIN_ERRORS):
            print(f"error: {exc}", file=sys.stderr)
            return 3
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
