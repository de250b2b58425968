"""Command-line front end.

Exit codes: 0 success, 1 certification/bench failure, 2 parse error,
3 range error, 4 element not in the group, 5 oracle budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import Optional, Sequence

from . import __version__
from .codec import decode, element_to_digits, encode
from .errors import BudgetExceededError, OutOfRangeError, ParseError, WeylRankError
from .number_system import (
    ConversionStats,
    MixedRadixDigits,
    WeylFamily,
    digits_to_int,
    format_digit_string,
    group_order,
    infer_rank,
    int_to_digits,
    parse_digit_string,
    radix_profile,
)
from .oracle import DEFAULT_BUDGET, certify
from .permutation import SignedPermutation, format_window, parse_window


def _parse_int(text: str) -> int:
    try:
        x = int(text.strip())
    except ValueError:
        raise ParseError(f"not an integer: {text!r}") from None
    if x < 0:
        raise OutOfRangeError(f"ranks are non-negative, got {x}")
    return x


def _rank_for(args, x: int) -> int:
    if args.rank is not None:
        return args.rank
    if args.infer_rank:
        return infer_rank(args.family, x)
    raise ParseError("give --rank N or --infer-rank")


def _record(
    family: WeylFamily,
    n: int,
    rank: Optional[int],
    digits: Optional[MixedRadixDigits],
    window: Optional[SignedPermutation],
) -> dict:
    return {
        "rank": rank,
        "family": family.value,
        "n": n,
        "digits": format_digit_string(digits) if digits is not None else None,
        "window": format_window(window) if window is not None else None,
    }


def _emit(args, record: dict, text: str) -> None:
    if args.json:
        print(json.dumps(record, sort_keys=True))
    else:
        print(text)


def cmd_convert(args) -> int:
    value = args.value.strip()
    if value.startswith("("):
        if args.rank is None and not args.infer_rank and "_" not in value:
            raise ParseError("give --rank N, --infer-rank or a _D12 style suffix")
        d = parse_digit_string(value, args.family, args.rank)
        x = digits_to_int(d)
        _emit(args, _record(d.profile.family, d.profile.n, x, d, None), str(x))
    else:
        x = _parse_int(value)
        n = _rank_for(args, x)
        d = int_to_digits(x, radix_profile(args.family, n))
        _emit(args, _record(args.family, n, x, d, None), format_digit_string(d, tag=args.tag))
    return 0


def cmd_decode(args) -> int:
    x = _parse_int(args.value)
    n = _rank_for(args, x)
    d = int_to_digits(x, radix_profile(args.family, n))
    w = decode(args.family, x, n)
    _emit(args, _record(args.family, n, x, d, w), format_window(w))
    return 0


def cmd_encode(args) -> int:
    w = parse_window(args.window)
    if args.rank is not None and args.rank != w.n:
        raise ParseError(f"window has rank {w.n}, not {args.rank}")
    d = element_to_digits(args.family, w)
    x = digits_to_int(d)
    text = str(x)
    if args.digits:
        text += "\n" + format_digit_string(d)
    _emit(args, _record(args.family, w.n, x, d, w), text)
    return 0


def _check_budget(args) -> int:
    order = group_order(args.family, args.rank)
    if order > args.budget:
        raise BudgetExceededError(
            f"{args.family.value}{args.rank} has {order} elements, over the budget of {args.budget}"
        )
    return order


def cmd_enumerate(args) -> int:
    order = _check_budget(args)
    profile = radix_profile(args.family, args.rank)
    for x in range(order):
        w = decode(args.family, x, args.rank)
        if args.json:
            rec = _record(args.family, args.rank, x, int_to_digits(x, profile), w)
            print(json.dumps(rec, sort_keys=True))
        else:
            print(f"{x} {format_window(w)}")
    return 0


def cmd_sample(args) -> int:
    order = group_order(args.family, args.rank)
    rng = random.Random(args.seed)
    profile = radix_profile(args.family, args.rank)
    for _ in range(args.count):
        x = rng.randrange(order)
        w = decode(args.family, x, args.rank)
        _emit(args, _record(args.family, args.rank, x, int_to_digits(x, profile), w), format_window(w))
    return 0


def cmd_certify(args) -> int:
    report = certify(args.family, args.rank, budget=args.budget, workers=args.workers)
    if args.json:
        print(json.dumps(report.to_dict(), sort_keys=True))
    elif args.verbose or not report.passed:
        print(report.to_text())
    else:
        print(report.summary())
    return 0 if report.passed else 1


def cmd_bench(args) -> int:
    family, n = args.family, args.rank
    profile = radix_profile(family, n)
    rng = random.Random(args.seed)
    ranks = [rng.randrange(profile.order) for _ in range(args.iterations)]

    stats = ConversionStats()
    t0 = time.perf_counter()
    elements = [decode(family, x, n, stats) for x in ranks]
    t1 = time.perf_counter()
    back = [encode(family, w) for w in elements]
    t2 = time.perf_counter()

    steps_per_call = stats.division_steps / max(1, len(ranks))
    linear = steps_per_call == profile.width and back == ranks
    result = {
        "family": family.value,
        "n": n,
        "iterations": len(ranks),
        "decode_seconds": t1 - t0,
        "encode_seconds": t2 - t1,
        "division_steps_per_decode": steps_per_call,
        "expected_division_steps": profile.width,
        "roundtrip_ok": back == ranks,
        "linear": linear,
    }
    if args.json:
        print(json.dumps(result, sort_keys=True))
    else:
        for key, value in result.items():
            if isinstance(value, float) and key.endswith("seconds"):
                value = f"{value:.6f}"
            print(f"{key}: {value}")
    return 0 if linear else 1


def _family(text: str) -> WeylFamily:
    try:
        return WeylFamily.coerce(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylrank",
        description="Integer ranks for elements of the Weyl groups A, B and D.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", type=_family, default=WeylFamily.D, help="A, B or D (default D)")
    common.add_argument("--json", action="store_true", help="emit JSON instead of plain text")

    ranked = argparse.ArgumentParser(add_help=False)
    ranked.add_argument("--rank", type=_positive, required=True, metavar="N")

    budgeted = argparse.ArgumentParser(add_help=False)
    budgeted.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", parents=[common], help="integer <-> digit string")
    p.add_argument("value", help="a non-negative integer or a digit string like (3:15:2)")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--rank", type=_positive, metavar="N")
    g.add_argument("--infer-rank", action="store_true", help="use the smallest rank that fits")
    p.add_argument("--tag", action="store_true", help="append a _D12 style suffix")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("decode", parents=[common], help="rank -> window")
    p.add_argument("value")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--rank", type=_positive, metavar="N")
    g.add_argument("--infer-rank", action="store_true")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("encode", parents=[common], help="window -> rank")
    p.add_argument("window", help="window notation, e.g. [4,3,-2,-1]")
    p.add_argument("--rank", type=_positive, metavar="N", help="optional; checked against the window")
    p.add_argument("--digits", action="store_true", help="also print the digit string")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("enumerate", parents=[common, ranked, budgeted], help="list the group in rank order")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("sample", parents=[common, ranked], help="uniformly random elements")
    p.add_argument("--count", type=_positive, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("certify", parents=[common, ranked, budgeted], help="exhaustive bijectivity check")
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("bench", parents=[common, ranked], help="time encode/decode")
    p.add_argument("--iterations", type=_positive, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except WeylRankError as exc:
        print(f"weylrank {args.command}: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
