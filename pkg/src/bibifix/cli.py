"""Command-line interface.

Exit codes: 0 success / property holds, 1 property verified false,
2 usage or input error, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from typing import IO, Iterator, Sequence

from . import serialize
from .codes import (
    build_cbbf,
    build_cbbf_rect,
    expands,
    verify_cross_set,
    verify_nonexpandable,
    verify_rect_cross_set,
)
from .errors import BibifixError, InvalidInputError, NoGrayOrderError, ResourceLimitError
from .generation import count_bbf, generate_bbf
from .graycode import build_cbbf_gray, diagonal_gray, iter_cbbf_gray, reflected_gray, verify_gray
from .matrices import SquareMatrix, bibifix_dims, is_bibifix_free
from .words import Word, WordCode, best_s, bifix_lengths, build_s, count_bf, is_bifix_free

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _q_arg(text: str) -> int:
    q = int(text)
    if not 2 <= q <= 10:
        raise argparse.ArgumentTypeError("q must be in 2..10")
    return q


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _add_common(p: argparse.ArgumentParser, *, k: bool = False, diagonal: bool = False) -> None:
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--q", type=_q_arg, default=2)
    if k:
        p.add_argument("--k", type=_positive)
    if diagonal:
        p.add_argument("--diagonal", help="comma-separated diagonal words, e.g. 1100")
    p.add_argument("--budget", type=_positive)
    p.add_argument("--out", help="write to this file instead of stdout")
    p.add_argument("--format", choices=("jsonl", "text"), default="jsonl")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bibifix", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="bifix report for a word or matrix")
    p.add_argument("what", choices=("word", "matrix"))
    p.add_argument("value", help='digits, e.g. 100100100, or rows joined by "/", e.g. 10/00')
    p.add_argument("--q", type=_q_arg)

    p = sub.add_parser("count", help="size of the bifix-free or bibifix-free set")
    p.add_argument("what", choices=("bf", "bbf"))
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--q", type=int, default=2)

    p = sub.add_parser("generate", help="stream every bibifix-free n x n matrix")
    _add_common(p)
    p.add_argument("--method", choices=("recursive", "brute"), default="recursive")
    p.add_argument("--stress", action="store_true", help="allow sets beyond the default size guard")

    p = sub.add_parser("build", help="construct a word set or a matrix code")
    p.add_argument("what", choices=("s", "cbbf", "rect"))
    _add_common(p, k=True, diagonal=True)
    p.add_argument("--m", type=_positive, help="column count for rect")

    p = sub.add_parser("verify", help="check the cross or non-expandable property of a code")
    p.add_argument("what", choices=("cross", "nonexpandable", "rect"))
    _add_common(p, k=True, diagonal=True)
    p.add_argument("--m", type=_positive, help="column count for rect")
    p.add_argument("--candidate", help="test only whether this matrix expands the code")

    p = sub.add_parser("gray", help="Gray-code listings")
    _add_common(p, k=True, diagonal=True)
    p.add_argument("--kind", choices=("cbbf", "reflected", "diagonal"), default="cbbf")
    p.add_argument("--check", action="store_true", help="print only the verification verdict")
    return parser


@contextmanager
def _output(path: str | None) -> Iterator[IO[str]]:
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fp:
            yield fp


def _emit(args, head: dict, items, *, seq: bool = False) -> None:
    with _output(args.out) as fp:
        if args.format == "jsonl":
            serialize.write_jsonl(fp, head, items, seq=seq)
        else:
            serialize.write_text(fp, items)


def _verdict(args, record: dict, witness_lines: Sequence[str] = ()) -> None:
    if args.format == "jsonl":
        print(json.dumps(record, separators=(", ", ": ")))
        for ln in witness_lines:
            print(ln)
    else:
        print(" ".join(f"{k}={v}" for k, v in record.items()))
        for ln in witness_lines:
            print(ln)


def _diagonal_code(args) -> WordCode | None:
    if not getattr(args, "diagonal", None):
        return None
    return WordCode.parse(args.diagonal.split(","), args.q)


def _code(args):
    return build_cbbf(args.n, args.q, k=args.k, diagonal_code=_diagonal_code(args), budget=args.budget)


def _code_header(code, kind: str = "cbbf") -> dict:
    return serialize.header(
        kind, code.n, code.q, len(code), k=code.k, diagonal=code.diagonal_code.strings()
    )


def cmd_check(args) -> int:
    if args.what == "word":
        w = Word.parse(args.value, args.q)
        lengths = sorted(bifix_lengths(w))
        free = is_bifix_free(w)
        print(f"word {w}: {'bifix-free' if free else 'not bifix-free'}; bifix lengths {lengths}")
    else:
        T = SquareMatrix.parse(args.value, args.q)
        dims = sorted(bibifix_dims(T))
        free = is_bibifix_free(T)
        print(f"matrix {T}: {'bibifix-free' if free else 'not bibifix-free'}; bibifix dimensions {dims}")
    return EXIT_OK if free else EXIT_FALSE


def cmd_count(args) -> int:
    fn = count_bf if args.what == "bf" else count_bbf
    print(fn(args.n, args.q))
    return EXIT_OK


def cmd_generate(args) -> int:
    bbf = generate_bbf(args.n, args.q, args.budget, method=args.method, stress=args.stress)
    _emit(args, serialize.header("bbf", args.n, args.q, len(bbf), method=args.method), bbf)
    return EXIT_OK


def cmd_build(args) -> int:
    if args.what == "s":
        if args.k is None:
            code = best_s(args.n, args.q, args.budget)
        else:
            code = build_s(args.n, args.q, args.k, args.budget)
        _emit(args, serialize.header("s", args.n, args.q, len(code), k=args.k), code)
    elif args.what == "cbbf":
        code = _code(args)
        _emit(args, _code_header(code), code)
    else:
        if args.m is None:
            raise InvalidInputError("build rect needs --m")
        items = build_cbbf_rect(args.n, args.m, args.q, diagonal_code=_diagonal_code(args), budget=args.budget)
        _emit(args, serialize.header("cbbf-rect", args.n, args.q, len(items), m=args.m), items)
    return EXIT_OK


def cmd_verify(args) -> int:
    base = {"check": args.what, "n": args.n, "q": args.q}
    if args.what == "rect":
        if args.m is None:
            raise InvalidInputError("verify rect needs --m")
        items = build_cbbf_rect(args.n, args.m, args.q, diagonal_code=_diagonal_code(args), budget=args.budget)
        ok, pair = verify_rect_cross_set(items)
        base.update(m=args.m, count=len(items))
        witness = pair
    else:
        code = _code(args)
        base["count"] = len(code)
        if args.what == "cross":
            ok, witness = verify_cross_set(code)
        elif args.candidate:
            M = SquareMatrix.parse(args.candidate, args.q)
            ok = not expands(code, M)
            witness = None if ok else M
        else:
            ok, witness = verify_nonexpandable(code, args.budget)
    base["result"] = ok
    lines = []
    if witness is not None:
        reason = "expanding-witness" if args.what == "nonexpandable" else "cross-conflict-pair"
        mats = witness if isinstance(witness, tuple) else (witness,)
        if args.format == "jsonl":
            lines = [json.dumps({"reason": reason, "matrices": [m.row_strings() for m in mats]}, separators=(", ", ": "))]
        else:
            lines = [f"{reason} " + " ".join(str(m) for m in mats)]
    _verdict(args, base, lines)
    return EXIT_OK if ok else EXIT_FALSE


def cmd_gray(args) -> int:
    if args.kind == "reflected":
        listing = reflected_gray(args.n, args.q, args.budget)
        kind = "gray-reflected"
    elif args.kind == "diagonal":
        code = _diagonal_code(args)
        if code is None:
            code = best_s(args.n, args.q, args.budget) if args.k is None else build_s(args.n, args.q, args.k, args.budget)
        listing = diagonal_gray(code, args.budget)
        kind = "gray-diagonal"
    else:
        code = _code(args)
        kind = "gray-cbbf"
        if args.check:
            # stream the listing so the check retains only what verify_gray keeps
            order = diagonal_gray(code.diagonal_code, args.budget)
            ok, idx = verify_gray(iter_cbbf_gray(order, code.n, code.q))
            _verdict(args, {"kind": kind, "n": args.n, "q": args.q, "count": len(code),
                            "result": ok, "first_offending_index": idx})
            return EXIT_OK if ok else EXIT_FALSE
        listing = build_cbbf_gray(args.n, args.q, diagonal_code=code.diagonal_code, budget=args.budget)
    if args.check:
        ok, idx = verify_gray(listing)
        _verdict(args, {"kind": kind, "n": args.n, "q": args.q, "count": len(listing),
                        "result": ok, "first_offending_index": idx})
        return EXIT_OK if ok else EXIT_FALSE
    _emit(args, serialize.header(kind, args.n, args.q, len(listing)), listing, seq=True)
    return EXIT_OK


COMMANDS = {
    "check": cmd_check,
    "count": cmd_count,
    "generate": cmd_generate,
    "build": cmd_build,
    "verify": cmd_verify,
    "gray": cmd_gray,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except NoGrayOrderError as exc:
        print(f"no gray order: {exc}", file=sys.stderr)
        return EXIT_FALSE
    except (InvalidInputError, BibifixError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        # downstream closed early (e.g. piped into head)
        sys.stderr.close()
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
