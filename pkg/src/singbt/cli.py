"""Command line front end.

Exit codes: 0 success, 1 parse error, 2 validation error, 3 failed check.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from importlib import resources
from typing import Dict, List, Optional, Sequence

from . import btalgebra as bt
from .braids import Word, closure_components, parse_token
from .checks import run_suite
from .partitions import SetPartition
from .scalars import RationalFunction, Scalar, parse_scalar
from .singular import GradedWord, graded_trace, upsilon_hat, verify_equivalence

EXIT_OK, EXIT_PARSE, EXIT_INVALID, EXIT_FAIL = 0, 1, 2, 3

MODES = ("upsilon", "upsilon_prime", "upsilon_hat")
MAX_STRANDS = 6


class ParseError(Exception):
    pass


class ValidationError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_PARSE)


@dataclass
class Request:
    command: str
    word: Word
    partition: Optional[SetPartition] = None
    mode: str = "upsilon"
    spec: Optional[str] = None
    bindings: Dict[str, RationalFunction] = field(default_factory=dict)
    big: bool = False


def parse_word(tokens: Sequence[str], strands: Optional[int]) -> Word:
    try:
        toks = [parse_token(t) for t in tokens]
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    n = strands if strands is not None else 1 + max((t.index for t in toks), default=0)
    if n < 1:
        raise ValidationError("need at least one strand")
    try:
        return Word(n, toks)
    except ValueError as exc:
        raise ValidationError(str(exc)) from None


def parse_partition(text: Optional[str], word: Word) -> Optional[SetPartition]:
    if text is None:
        return None
    count, _ = closure_components(word)
    for chunk in text.replace("|", ",").split(","):
        chunk = chunk.strip()
        if chunk and not chunk.isdigit():
            raise ParseError(f"bad tie specification {text!r}")
    try:
        return SetPartition.parse(text, count)
    except ValueError as exc:
        raise ValidationError(f"{exc} (the closure has {count} components)") from None


def parse_bindings(items: Optional[List[str]]) -> Dict[str, RationalFunction]:
    out = {}
    for item in items or []:
        if "=" not in item:
            raise ParseError(f"--set expects name=value, got {item!r}")
        name, value = item.split("=", 1)
        name = name.strip()
        try:
            out[name] = parse_scalar(value).as_rational()
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad value in --set {item!r}: {exc}") from None
    return out


def build_request(command: str, tokens: Sequence[str], args) -> Request:
    word = parse_word(tokens, args.strands)
    if word.n > MAX_STRANDS and not args.big:
        raise ValidationError(f"more than {MAX_STRANDS} strands needs --big")
    part = parse_partition(args.ties, word)
    if args.mode not in MODES:
        raise ParseError(f"unknown mode {args.mode!r}")
    return Request(command, word, part, args.mode, getattr(args, "spec", None),
                   parse_bindings(getattr(args, "set", None)), args.big)


def evaluate(req: Request) -> Scalar:
    if req.mode == "upsilon_hat":
        value = upsilon_hat(req.word, req.partition, big=req.big)
    else:
        value = bt.invariant(req.word, req.partition, req.mode)
    if req.spec:
        value = bt.specialize_invariant(value, req.spec)
    if req.bindings:
        try:
            value = value.substitute(req.bindings)
        except ValueError as exc:
            raise ValidationError(str(exc)) from None
    return value


def cross_check(req: Request) -> bool:
    """Recompute along different trace choices (and the graded route for Upsilon)."""
    if req.mode == "upsilon_hat":
        base = upsilon_hat(req.word, req.partition, big=req.big)
        return base == bt.invariant(req.word, req.partition, "upsilon")
    base = bt.invariant(req.word, req.partition, req.mode)
    for opts in (dict(pick="min", conjugator="transposition", coset="left"),
                 dict(pick="max", conjugator="transposition", coset="left")):
        if bt.invariant(req.word, req.partition, req.mode, **opts) != base:
            return False
    if req.mode == "upsilon" and req.word.singular_degree() <= 4:
        if upsilon_hat(req.word, req.partition) != base:
            return False
    return True


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_invariant(args) -> int:
    req = build_request("invariant", args.word, args)
    if args.verify and not cross_check(req):
        print("consistency check failed", file=sys.stderr)
        return EXIT_FAIL
    print(evaluate(req))
    return EXIT_OK


def cmd_specialize(args) -> int:
    if not args.spec:
        raise ParseError("specialize needs --spec")
    return cmd_invariant(args)


def cmd_graded(args) -> int:
    word = parse_word(args.word, args.strands)
    part = parse_partition(args.ties, word)
    ties = bt.strand_ties(word, part) if part is not None else None
    alpha = GradedWord.from_word(word, ties)
    if alpha.d > 4 and not args.big:
        raise ValidationError("more than 4 singular crossings needs --big")
    if args.verify and not verify_equivalence(alpha):
        print("graded trace does not match the representation route", file=sys.stderr)
        return EXIT_FAIL
    print(graded_trace(alpha, big=args.big))
    return EXIT_OK


def cmd_check(args) -> int:
    outcomes = run_suite(args.scope)
    failed = 0
    for o in outcomes:
        if not o.passed or args.verbose:
            print(o)
        failed += not o.passed
    print(f"{args.scope}: {len(outcomes) - failed}/{len(outcomes)} passed")
    return EXIT_OK if failed == 0 else EXIT_FAIL


def cmd_compare(args) -> int:
    class _Side:
        pass

    sides = []
    for text, ties, strands in ((args.word_a, args.ties_a, args.strands_a),
                                (args.word_b, args.ties_b, args.strands_b)):
        side = _Side()
        side.strands, side.ties, side.mode, side.big = strands, ties, args.mode, args.big
        sides.append(build_request("compare", text.split(), side))
    equal = evaluate(sides[0]) == evaluate(sides[1])
    print("equal" if equal else "distinct")
    return EXIT_OK


def load_corpus(path: Optional[str]) -> List[str]:
    if path is None:
        return resources.files("singbt").joinpath("data/corpus.txt").read_text().splitlines()
    with open(path) as fh:
        return fh.read().splitlines()


def parse_corpus_line(line: str):
    """``word ; ties ; mode ; expected``; a word may start with ``<n>:``."""
    fields = [f.strip() for f in line.split(";")]
    if len(fields) != 4:
        raise ParseError(f"corpus line needs 4 fields: {line!r}")
    word_text, ties, mode, expected = fields
    strands = None
    if ":" in word_text:
        head, word_text = word_text.split(":", 1)
        if not head.strip().isdigit():
            raise ParseError(f"bad strand prefix in {line!r}")
        strands = int(head)
    return word_text.split(), strands, (ties or None) if ties != "-" else None, mode, expected


def cmd_corpus(args) -> int:
    failed = 0
    for lineno, line in enumerate(load_corpus(args.file), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        tokens, strands, ties, mode, expected = parse_corpus_line(line)

        class _Side:
            pass

        side = _Side()
        side.strands, side.ties, side.mode, side.big = strands, ties, mode, args.big
        value = evaluate(build_request("invariant", tokens, side))
        if expected == "?":
            print(f"{lineno}: record  {value}")
            continue
        ok = value == parse_scalar(expected)
        failed += not ok
        print(f"{lineno}: {'pass' if ok else 'FAIL'}  {value}")
    return EXIT_OK if failed == 0 else EXIT_FAIL


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------


def _word_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("word", nargs="*", help="tokens s<i>, s<i>^-1, t<i>, e<i>")
    p.add_argument("--strands", type=int, help="strand count (default 1 + largest index)")
    p.add_argument("--ties", help='partition of closure components, e.g. "1,2|3"')
    p.add_argument("--mode", default="upsilon", help="upsilon, upsilon_prime or upsilon_hat")
    p.add_argument("--spec", choices=sorted(bt.SPECIALIZATIONS), help="specialization")
    p.add_argument("--set", action="append", metavar="VAR=VALUE", help="substitute a variable")
    p.add_argument("--verify", action="store_true", help="cross-check along another route")
    p.add_argument("--big", action="store_true", help="lift the size guards")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="singbt", description="Invariants of singular and tied singular links.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("invariant", help="value of an invariant on a braid closure")
    _word_options(p)
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("specialize", help="invariant followed by a specialization")
    _word_options(p)
    p.set_defaults(func=cmd_specialize)

    p = sub.add_parser("graded", help="graded trace of a singular braid word")
    _word_options(p)
    p.set_defaults(func=cmd_graded)

    p = sub.add_parser("check", help="run a verification suite")
    p.add_argument("scope", choices=["relations", "trace", "markov", "graded", "skein", "all"])
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("compare", help="decide whether two invariant values are equal")
    p.add_argument("word_a")
    p.add_argument("word_b")
    p.add_argument("--ties-a")
    p.add_argument("--ties-b")
    p.add_argument("--strands-a", type=int)
    p.add_argument("--strands-b", type=int)
    p.add_argument("--mode", default="upsilon")
    p.add_argument("--big", action="store_true")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("corpus", help="evaluate a corpus file of known values")
    p.add_argument("file", nargs="?")
    p.add_argument("--big", action="store_true")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValidationError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
