"""Command line front end.

Exit codes: 0 success or perfect, 1 verified imperfect, 2 invalid input or
parameters, 3 capacity or budget exceeded, 4 no theta predecessor,
5 construction disagrees with the exhaustive search.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import formats, generator, oracle
from .core import Pair, Params, theta, theta_preimage
from .errors import (
    CapacityError,
    DomainError,
    InvalidInputError,
    InvalidParamsError,
    NecklaceError,
    NoPredecessorError,
    PreconditionError,
    TheoremViolation,
)

EXIT_OK = 0
EXIT_IMPERFECT = 1
EXIT_INVALID = 2
EXIT_CAPACITY = 3
EXIT_NO_PREDECESSOR = 4
EXIT_THEOREM = 5

GUARD_ENV = "PERFECT_NECKLACE_GUARD"
MAX_REPORTED_VIOLATIONS = 20
_CHUNK = 1 << 16


def _params(args) -> Params:
    return Params(args.s, args.n, args.k)


def _guard(args) -> int:
    if args.guard is not None:
        return args.guard
    env = os.environ.get(GUARD_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise InvalidInputError(f"{GUARD_ENV} must be an integer, got {env!r}") from None
    return generator.DEFAULT_GUARD


def cmd_generate(args, out) -> int:
    p = _params(args)
    stream = generator.build_necklace(p, guard=_guard(args))
    if args.format == formats.JSON:
        for piece in formats.iter_json_necklace(stream.blocks(), p.s, p.n, p.k, stream.total):
            out.write(piece)
    elif args.format == formats.BLOCKS:
        sep = ""
        for block in stream.blocks():
            out.write(sep + formats.render_word(block, p.s))
            sep = formats.BLOCK_SEP
    else:
        buf = []
        first = True
        for a in stream:
            buf.append(a)
            if len(buf) >= _CHUNK:
                out.write(formats.render_chunk(buf, p.s, first))
                first, buf = False, []
        out.write(formats.render_chunk(buf, p.s, first))
    out.write("\n")
    return EXIT_OK


def _listing(pairs, p: Params, fmt: str, label: str, out) -> int:
    count = 0
    if fmt == formats.JSON:
        out.write("[")
        for a in pairs:
            out.write((", " if count else "") + json.dumps(formats.pair_to_json(a.word, a.residue)))
            count += 1
        out.write("]\n")
    else:
        for a in pairs:
            out.write(formats.render_pair(a.word, a.residue, p.s) + "\n")
            count += 1
    print(f"{count} {label}", file=sys.stderr)
    return EXIT_OK


def cmd_lyndon(args, out) -> int:
    p = _params(args)
    return _listing(generator.lyndon_list(p), p, args.format, "Lyndon pairs", out)


def cmd_maximal(args, out) -> int:
    p = _params(args)
    return _listing(generator.maximal_list(p), p, args.format, "maximal pairs", out)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InvalidInputError(f"cannot read {path}: {exc.strerror}") from None


def cmd_verify(args, out) -> int:
    p = _params(args)
    text = _read_input(args.input)
    if args.format == formats.JSON:
        word = formats.parse_json(text, p.s)
    else:
        word = formats.parse_word(text, p.s)
    report = oracle.check_perfect(word, p)
    if report.is_perfect:
        out.write(f"PERFECT ({p.n},{p.k}) length={report.input_length}\n")
        return EXIT_OK
    out.write(f"NOT PERFECT ({p.n},{p.k}) length={report.input_length}\n")
    for v in report.violations[:MAX_REPORTED_VIOLATIONS]:
        if v.reason == oracle.WRONG_LENGTH:
            out.write(f"  {v.reason}: found {v.found}, expected {v.expected}\n")
        elif v.reason == oracle.WRONG_COUNT:
            word = formats.render_word(v.word, p.s)
            out.write(f"  {word} {v.reason}: found {v.found}, expected {v.expected}\n")
        else:
            word = formats.render_word(v.word, p.s)
            out.write(f"  {word} {v.reason}: residues {list(v.residues)}\n")
    hidden = len(report.violations) - MAX_REPORTED_VIOLATIONS
    if hidden > 0:
        out.write(f"  ... {hidden} more\n")
    return EXIT_IMPERFECT


def cmd_theta(args, out) -> int:
    p = _params(args)
    word = formats.parse_word(args.word, p.s)
    a = Pair(p.check_word(word, p.n), 0)
    b = theta_preimage(a, p) if args.inverse else theta(a, p)
    out.write(formats.render_pair(b.word, b.residue, p.s) + "\n")
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    p = _params(args)
    found = oracle.brute_force_greatest(p, budget=args.budget, max_length=args.max_length)
    built = generator.build_necklace(p).collect()
    text = formats.render_word(found, p.s)
    if tuple(found) == tuple(built):
        out.write(f"{text} MATCH\n")
        return EXIT_OK
    out.write(f"{text} MISMATCH construction={formats.render_word(built, p.s)}\n")
    return EXIT_THEOREM


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="perfect-necklace",
        description="Lexicographically greatest (n,k)-perfect necklaces via Lyndon pairs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, fmts=formats.FORMATS):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("-s", type=int, required=True, help="alphabet size")
        sp.add_argument("-n", type=int, required=True, help="word length")
        sp.add_argument("-k", type=int, required=True, help="modulus; k | n or n | k")
        if fmts:
            sp.add_argument("--format", "-f", choices=fmts, default=formats.PLAIN)
        sp.set_defaults(func=func)
        return sp

    sp = add("generate", cmd_generate, "stream the necklace")
    sp.add_argument(
        "--guard", type=int, default=None,
        help=f"max symbols to emit (default {generator.DEFAULT_GUARD}, env {GUARD_ENV})",
    )
    add("lyndon", cmd_lyndon, "list the Lyndon pairs", (formats.PLAIN, formats.JSON))
    add("maximal", cmd_maximal, "list the maximal pairs", (formats.PLAIN, formats.JSON))
    sp = add("verify", cmd_verify, "check a necklace for perfectness")
    sp.add_argument("input", nargs="?", default="-", help="file path, or - for stdin")
    sp = add("theta", cmd_theta, "apply theta (or its inverse) to one word", None)
    sp.add_argument("word")
    sp.add_argument("--inverse", action="store_true", help="chain predecessor instead")
    sp = add("oracle", cmd_oracle, "exhaustive search, compared with the construction", None)
    sp.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET, help="max search nodes")
    sp.add_argument(
        "--max-length", type=int, default=oracle.DEFAULT_MAX_LENGTH, help="max s^n*k to search"
    )
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        code = args.func(args, out)
        out.flush()
        return code
    except (InvalidParamsError, InvalidInputError, DomainError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except NoPredecessorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_PREDECESSOR
    except TheoremViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_THEOREM
    except NecklaceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except BrokenPipeError:
        # downstream reader closed early, e.g. `| head`
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
