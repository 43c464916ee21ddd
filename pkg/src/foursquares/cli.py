"""Command-line front end: decompose, verify, witness, and batch verbs.

Exit codes: 0 success, 1 verification or batch failure, 2 usage error,
3 factorization capability error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from .decompose import DescentState, four_squares, trace_descent, witness
from .modular import FactorizationError, factorize
from .quaternion import Quad

__all__ = ["main", "run"]

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAPABILITY = 3


@dataclass
class OutputRecord:
    """One result line: n, its four squares, validity, optional trace."""

    n: int | None
    squares: tuple[int, int, int, int] | None
    valid: bool
    trace: list[DescentState] | None = None
    error: str | None = None

    def to_json(self) -> str:
        payload: dict = {
            "n": self.n,
            "squares": list(self.squares) if self.squares is not None else None,
            "valid": self.valid,
        }
        if self.trace is not None:
            payload["trace"] = [
                {"m": state.multiplier, "quad": list(state.quad)} for state in self.trace
            ]
        if self.error is not None:
            payload["error"] = self.error
        return json.dumps(payload, separators=(",", ":"))

    def to_plain(self) -> str:
        a, b, c, d = self.squares
        return f"{self.n} = {a}^2 + {b}^2 + {c}^2 + {d}^2"


def _nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"negative input rejected: {value}")
    return value


def _positive_int(text: str) -> int:
    value = _nonnegative_int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _any_int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def _descent_trace(n: int) -> list[tuple[int, list[DescentState]]]:
    """Descent states for each distinct odd prime factor of n, ascending."""
    return [(p, trace_descent(p)) for p, _ in factorize(n) if p != 2]


def cmd_decompose(args: argparse.Namespace) -> int:
    try:
        dec = four_squares(args.n)
        traces = _descent_trace(args.n) if args.trace else None
    except FactorizationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY
    record = OutputRecord(dec.n, tuple(dec.quad), True)
    if traces is not None:
        record.trace = [state for _, states in traces for state in states]
    if args.json:
        print(record.to_json())
    else:
        print(record.to_plain())
        for p, states in traces or []:
            print(f"descent p={p}:")
            for state in states:
                print(f"m={state.multiplier} quad={state.quad}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    total = args.a**2 + args.b**2 + args.c**2 + args.d**2
    if total == args.n:
        print("OK")
        return EXIT_OK
    print("FAIL")
    return EXIT_FAIL


def cmd_witness(args: argparse.Namespace) -> int:
    product = Quad(args.f, args.g, args.h, args.k)
    if product.norm() != args.m * args.a:
        print(
            f"error: norm {product.norm()} != {args.m} * {args.a}",
            file=sys.stderr,
        )
        return EXIT_USAGE
    try:
        built = witness(args.m, args.a, product)
    except FactorizationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY
    print(f"L = {built.left}")
    print(f"R = {built.right}")
    print(f"verified: mat{built.product} = mat{built.left}^T * mat{built.right}")
    return EXIT_OK


def _decompose_line(text: str, lineno: int) -> OutputRecord:
    try:
        n = int(text)
    except ValueError:
        return OutputRecord(None, None, False, error=f"line {lineno}: not an integer: {text!r}")
    if n < 0:
        return OutputRecord(n, None, False, error=f"line {lineno}: negative input rejected")
    try:
        dec = four_squares(n)
    except FactorizationError as exc:
        return OutputRecord(n, None, False, error=f"line {lineno}: {exc}")
    return OutputRecord(dec.n, tuple(dec.quad), True)


def cmd_batch(args: argparse.Namespace) -> int:
    if args.source is not None:
        try:
            stream = open(args.source, "r", encoding="utf-8")
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    else:
        stream = sys.stdin
    failed = False
    try:
        for lineno, raw in enumerate(stream, start=1):
            text = raw.strip()
            if not text:
                continue
            record = _decompose_line(text, lineno)
            if args.json:
                print(record.to_json())
            elif record.valid:
                print(record.to_plain())
            else:
                print(f"error: {record.error}")
            if not record.valid:
                failed = True
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if stream is not sys.stdin:
            stream.close()
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="foursquares",
        description="Write nonnegative integers as sums of four squares, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_dec = sub.add_parser("decompose", help="decompose one integer")
    p_dec.add_argument("n", type=_nonnegative_int, help="nonnegative integer")
    p_dec.add_argument("--json", action="store_true", help="emit one JSON record")
    p_dec.add_argument(
        "--trace", action="store_true", help="append descent states per odd prime factor"
    )
    p_dec.set_defaults(func=cmd_decompose)

    p_ver = sub.add_parser("verify", help="check that n == a^2 + b^2 + c^2 + d^2")
    p_ver.add_argument("n", type=_nonnegative_int)
    for name in "abcd":
        p_ver.add_argument(name, type=_any_int)
    p_ver.set_defaults(func=cmd_verify)

    p_wit = sub.add_parser(
        "witness", help="factor a norm m*A quadruple as mat(L)^T * mat(R)"
    )
    p_wit.add_argument("m", type=_positive_int, help="left norm, >= 1")
    p_wit.add_argument("a", metavar="A", type=_nonnegative_int, help="right norm, >= 0")
    for name, meta in zip("fghk", "FGHK"):
        p_wit.add_argument(name, metavar=meta, type=_any_int)
    p_wit.set_defaults(func=cmd_witness)

    p_bat = sub.add_parser("batch", help="decompose one integer per input line")
    p_bat.add_argument(
        "--from", dest="source", metavar="PATH", help="read from PATH instead of stdin"
    )
    p_bat.add_argument("--json", action="store_true", help="emit one JSON record per line")
    p_bat.set_defaults(func=cmd_batch)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return args.func(args)


def run() -> None:
    sys.exit(main())
