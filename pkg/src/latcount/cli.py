"""Command-line interface.

Subcommands: count, enumerate, table, verify, series, euler-factor.
All results go to stdout (one record per line, deterministic order);
diagnostics go to stderr.  Exit codes: 0 success, 2 invalid arguments,
3 capacity bound exceeded, 4 cross-method discrepancy or property failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import islice

from .arith import ENV_TRIAL_DIVISION_BOUND
from .core import CapacityError, CountRequest, DiscrepancyError, Method
from .count import (
    count_all_methods,
    count_by_factorization_sum,
    count_by_gruber,
    count_by_recursion,
    run_count,
)
from .hnf import DEFAULT_ENUMERATION_CAP, enumerate_hnf
from .series import (
    dirichlet_coefficients,
    euler_factor,
    lhs_product,
    rhs_sum,
    verify_generating_identity,
)
from .qcalc import gauss_binomial

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAPACITY = 3
EXIT_MISMATCH = 4

FORMATS = ("plain", "csv", "json-lines")


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _jsonl(record: dict) -> str:
    return json.dumps(record, separators=(",", ":"))


def _count_record(fmt: str, n: int, m: int, method: str, value: int) -> str:
    if fmt == "csv":
        return f"{method},{value}"
    if fmt == "json-lines":
        return _jsonl({"n": n, "m": m, "method": method, "value": str(value)})
    return f"{method}: {value}"


def cmd_count(args) -> int:
    if args.all:
        results = count_all_methods(args.n, args.m, include_enumeration=True)
        for result in results:
            print(_count_record(args.format, args.n, args.m, str(result.method), result.value))
        return EXIT_OK
    method = Method(args.method)
    result = run_count(CountRequest(args.n, args.m, method))
    if args.format == "plain":
        print(result.value)
    else:
        print(_count_record(args.format, args.n, args.m, str(result.method), result.value))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    stream = enumerate_hnf(args.n, args.m)
    if args.limit is not None:
        stream = islice(stream, args.limit)
    emitted = 0
    for matrix in stream:
        emitted += 1
        if args.limit is None and emitted > DEFAULT_ENUMERATION_CAP:
            raise CapacityError(
                f"enumeration exceeded the default cap {DEFAULT_ENUMERATION_CAP}; "
                f"pass --limit to stream a bounded prefix"
            )
        if args.format == "json-lines":
            print(_jsonl({"n": args.n, "m": args.m, "matrix": matrix.to_line()}))
        else:
            print(matrix.to_line())
    if args.format == "json-lines":
        print(_jsonl({"count": emitted}))
    elif args.format == "csv":
        print(f"count,{emitted}")
    else:
        print(f"count: {emitted}")
    return EXIT_OK


def cmd_table(args) -> int:
    method = Method(args.method)
    if method is Method.DIRICHLET:
        # one convolution pass covers the whole table
        coefficients = dirichlet_coefficients(args.n, args.max_m)
        values = [coefficients[m] for m in range(1, args.max_m + 1)]
    else:
        values = [
            run_count(CountRequest(args.n, m, method)).value for m in range(1, args.max_m + 1)
        ]
    for m, value in enumerate(values, start=1):
        if args.format == "csv":
            print(f"{m},{value}")
        elif args.format == "json-lines":
            print(_jsonl({"n": args.n, "m": m, "method": str(method), "value": str(value)}))
        else:
            print(f"{m} {value}")
    return EXIT_OK


def _verify_cross_methods(n_max: int, m_max: int):
    # One convolution table per n; the per-m methods are compared against it.
    for n in range(1, n_max + 1):
        coefficients = dirichlet_coefficients(n, m_max)
        for m in range(1, m_max + 1):
            values = [
                (Method.DIRICHLET.value, coefficients[m]),
                (Method.FACTORIZATION_SUM.value, count_by_factorization_sum(n, m).value),
                (Method.GRUBER.value, count_by_gruber(n, m).value),
                (Method.RECURSION.value, count_by_recursion(n, m).value),
            ]
            if len({value for _, value in values}) > 1:
                raise DiscrepancyError(n, m, values)


def _verify_symmetry(bound: int):
    for m in range(bound + 1):
        for k in range(m + 1):
            if gauss_binomial(m, k) != gauss_binomial(m, m - k):
                return f"m={m} k={k}"
    return None


def _verify_identity(n_max: int, t_order: int):
    for n in range(1, n_max + 1):
        for order in range(t_order + 1):
            if not verify_generating_identity(n, order):
                return f"n={n} t-order={order}"
    return None


def cmd_verify(args) -> int:
    failures = 0

    try:
        _verify_cross_methods(args.n_max, args.m_max)
        print(f"cross-method-agreement: pass (n <= {args.n_max}, m <= {args.m_max})")
    except DiscrepancyError as exc:
        failures += 1
        print(f"cross-method-agreement: fail at n={exc.n} m={exc.m} ({exc})")

    symmetry_bound = args.n_max + args.t_order
    counterexample = _verify_symmetry(symmetry_bound)
    if counterexample is None:
        print(f"qbinomial-symmetry: pass (m <= {symmetry_bound})")
    else:
        failures += 1
        print(f"qbinomial-symmetry: fail at {counterexample}")

    counterexample = _verify_identity(args.n_max, args.t_order)
    if counterexample is None:
        print(f"generating-identity: pass (n <= {args.n_max}, t-order <= {args.t_order})")
    else:
        failures += 1
        print(f"generating-identity: fail at {counterexample}")

    return EXIT_MISMATCH if failures else EXIT_OK


def cmd_series(args) -> int:
    lhs = lhs_product(args.n, args.t_order)
    rhs = rhs_sum(args.n, args.t_order)
    print("lhs:")
    for line in lhs.render_lines():
        print(line)
    print("rhs:")
    for line in rhs.render_lines():
        print(line)
    if lhs == rhs:
        print("verdict: match")
        return EXIT_OK
    print("verdict: MISMATCH")
    return EXIT_MISMATCH


def cmd_euler_factor(args) -> int:
    coefficients = euler_factor(args.p, args.n, args.k_max)
    for k, value in enumerate(coefficients):
        if args.format == "csv":
            print(f"{k},{value}")
        elif args.format == "json-lines":
            print(_jsonl({"p": args.p, "n": args.n, "k": k, "coefficient": str(value)}))
        else:
            print(f"{k} {value}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latcount",
        description="Count and enumerate index-m sublattices of the integer lattice Z^n.",
        epilog=f"The environment variable {ENV_TRIAL_DIVISION_BOUND} overrides the "
        "trial-division bound used when factoring m (default 10^7).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    method_names = [m.value for m in Method]

    p_count = sub.add_parser("count", help="compute the sublattice count f_n(m)")
    p_count.add_argument("--n", type=positive_int, required=True, help="lattice dimension")
    p_count.add_argument("--m", type=positive_int, required=True, help="sublattice index")
    p_count.add_argument("--method", choices=method_names, default=Method.GRUBER.value)
    p_count.add_argument(
        "--all", action="store_true", help="run every method and cross-check the values"
    )
    p_count.add_argument("--format", choices=FORMATS, default="plain")
    p_count.set_defaults(handler=cmd_count)

    p_enum = sub.add_parser("enumerate", help="stream the normal-form basis matrices")
    p_enum.add_argument("--n", type=positive_int, required=True)
    p_enum.add_argument("--m", type=positive_int, required=True)
    p_enum.add_argument("--limit", type=nonnegative_int, help="stop after this many matrices")
    p_enum.add_argument("--format", choices=FORMATS, default="plain")
    p_enum.set_defaults(handler=cmd_enumerate)

    p_table = sub.add_parser("table", help="tabulate f_n(m) for m = 1..max-m")
    p_table.add_argument("--n", type=positive_int, required=True)
    p_table.add_argument("--max-m", type=positive_int, required=True)
    p_table.add_argument("--method", choices=method_names, default=Method.GRUBER.value)
    p_table.add_argument("--format", choices=FORMATS, default="plain")
    p_table.set_defaults(handler=cmd_table)

    p_verify = sub.add_parser("verify", help="run the cross-method and identity checks")
    p_verify.add_argument("--n-max", type=positive_int, required=True)
    p_verify.add_argument("--m-max", type=positive_int, required=True)
    p_verify.add_argument("--t-order", type=nonnegative_int, required=True)
    p_verify.set_defaults(handler=cmd_verify)

    p_series = sub.add_parser("series", help="print both sides of the generating identity")
    p_series.add_argument("--n", type=positive_int, required=True)
    p_series.add_argument("--t-order", type=nonnegative_int, required=True)
    p_series.set_defaults(handler=cmd_series)

    p_euler = sub.add_parser("euler-factor", help="local factor of the count series at a prime")
    p_euler.add_argument("--p", type=positive_int, required=True, help="a prime")
    p_euler.add_argument("--n", type=positive_int, required=True)
    p_euler.add_argument("--k-max", type=nonnegative_int, required=True)
    p_euler.add_argument("--format", choices=FORMATS, default="plain")
    p_euler.set_defaults(handler=cmd_euler_factor)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except DiscrepancyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
