"""``braidgen`` command line.

Exit codes: 0 success, 1 usage error, 2 computation error.  Errors are a
single ``braidgen: error: ...`` line on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import oracle
from .acceptance import CHECKS, run_checks
from .automaton import build_automaton, check_minimality, export
from .counting import count_with_prefix, reference_count
from .growth import default_cache_path, get_tables
from .prefixes import f_for_word, f_to_set
from .sampler import RandomSource, SampleRequest, rank, sample, sample_batch, unrank
from .words import ArtinWord, BraidError, format_word, parse_word

EXIT_USAGE = 1
EXIT_COMPUTE = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _word_out(w: ArtinWord) -> str:
    return format_word(w)


def _emit(args, value, lines: Optional[list[str]] = None) -> None:
    if args.json:
        print(json.dumps(value))
    else:
        print("\n".join(lines if lines is not None else [str(value)]))


def _tables(args, n: int, k: int):
    if args.no_cache:
        cache = None
    else:
        cache = args.cache or default_cache_path(n)
    return get_tables(n, k, cache)


def _check_nk(args, *, need_k: bool = True) -> None:
    if args.n < 2:
        raise UsageError("-n must be at least 2")
    if need_k and args.k < 0:
        raise UsageError("-k must be non-negative")


def cmd_count(args) -> None:
    _check_nk(args)
    _emit(args, _tables(args, args.n, args.k).count(args.k))


def cmd_count_prefix(args) -> None:
    _check_nk(args)
    w = parse_word(args.word, args.n)
    g = _tables(args, args.n, args.k)
    fn = reference_count if args.reference else count_with_prefix
    _emit(args, fn(args.n, args.k, w, args.m, g))


def cmd_sample(args) -> None:
    _check_nk(args)
    if args.count < 1:
        raise UsageError("--count must be at least 1")
    req = SampleRequest(args.n, args.k, args.count, args.seed)
    g = _tables(args, args.n, args.k)
    if args.workers > 1:
        words = sample_batch(req, g, workers=args.workers)
    else:
        words = sample(req, g, RandomSource(args.seed))
    _emit(args, [list(w.letters) for w in words], [_word_out(w) for w in words])


def cmd_unrank(args) -> None:
    _check_nk(args)
    w = unrank(args.n, args.k, args.rank, _tables(args, args.n, args.k))
    _emit(args, list(w.letters), [_word_out(w)])


def cmd_rank(args) -> None:
    _check_nk(args, need_k=False)
    w = parse_word(args.word, args.n)
    _emit(args, rank(w, _tables(args, args.n, len(w))))


def cmd_check_word(args) -> None:
    _check_nk(args, need_k=False)
    w = parse_word(args.word, args.n)
    f = f_for_word(w)
    if f is None:
        _emit(args, {"lex_representative": False}, ["not a lex-representative"])
        return
    forbidden = [format_word(x) for x in f_to_set(f)]
    _emit(
        args,
        {"lex_representative": True, "f": list(f), "forbidden": forbidden},
        ["lex-representative", "f = " + " ".join(map(str, f)), "forbidden: " + "; ".join(forbidden)],
    )


def cmd_automaton(args) -> None:
    _check_nk(args, need_k=False)
    A = build_automaton(args.n, max_strands=args.max_strands)
    if args.states:
        _emit(args, A.accepted_count)
    if args.check_minimal:
        minimal = check_minimality(A)
        _emit(args, minimal, ["minimal" if minimal else "not minimal"])
    if args.export:
        sys.stdout.write(export(A, args.export, include_fail=args.include_fail))
    if not (args.states or args.check_minimal or args.export):
        _emit(args, A.accepted_count)


def cmd_oracle(args) -> None:
    _check_nk(args, need_k=args.action == "enumerate")
    if args.action == "enumerate":
        words = oracle.enumerate_lex_reps(args.n, args.k, max_n=args.max_n, max_k=args.max_k)
        _emit(args, [list(w.letters) for w in words], [_word_out(w) for w in words])
        return
    w = parse_word(args.word, args.n)
    if args.action == "normalize":
        nf = oracle.normalize(w)
        _emit(args, list(nf.letters), [_word_out(nf)])
    else:
        found = sorted(oracle.brute_forbidden_min(w))
        _emit(args, [list(x) for x in found], [format_word(x) for x in found])


def cmd_verify(args) -> int:
    numbers = sorted(CHECKS) if not args.only else [int(x) for x in args.only.split(",")]
    if any(i not in CHECKS for i in numbers):
        raise UsageError(f"unknown check in --only; choose from {sorted(CHECKS)}")
    results = []
    for i in numbers:
        (result,) = run_checks([i])
        results.append(result)
        if not args.json:
            print(result.line(), flush=True)
    if args.json:
        print(json.dumps([
            {"criterion": r.number, "title": r.title, "passed": r.passed, "detail": r.detail, "seconds": r.seconds}
            for r in results
        ]))
    return 0 if all(r.passed for r in results) else EXIT_COMPUTE


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="print JSON instead of plain lines")
    common.add_argument("--cache", help="growth table cache file (default: user cache directory)")
    common.add_argument("--no-cache", action="store_true", help="do not read or write a growth cache")

    parser = _Parser(prog="braidgen", description="Count and uniformly sample positive braids.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count", parents=[common], help="number of positive braids of length k")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("count-prefix", parents=[common], help="completions of a prefix avoiding sigma_1..sigma_m")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-w", "--word", default="", help='prefix word, e.g. "3 2" (default: empty)')
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--reference", action="store_true", help="use subset enumeration instead of the window scan")
    p.set_defaults(func=cmd_count_prefix)

    p = sub.add_parser("sample", parents=[common], help="uniformly random braids of length k")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int)
    p.add_argument("--workers", type=int, default=1, help="processes for independent split streams")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("unrank", parents=[common], help="the r-th lex-representative of length k (1-based)")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-r", "--rank", type=int, required=True)
    p.set_defaults(func=cmd_unrank)

    p = sub.add_parser("rank", parents=[common], help="1-based rank of a lex-representative")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("word")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("check-word", parents=[common], help="lex-representative test and forbidden prefixes")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("word")
    p.set_defaults(func=cmd_check_word)

    p = sub.add_parser("automaton", parents=[common], help="the minimal acceptor of lex-representatives")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--export", choices=["dot", "json"])
    p.add_argument("--include-fail", action="store_true")
    p.add_argument("--states", action="store_true", help="print the number of accepted states")
    p.add_argument("--check-minimal", action="store_true")
    p.add_argument("--max-strands", type=int, default=16)
    p.set_defaults(func=cmd_automaton)

    oracle_parser = sub.add_parser("oracle", help="brute-force ground truth")
    actions = oracle_parser.add_subparsers(dest="action", required=True, parser_class=_Parser)
    for action, help_text in [
        ("enumerate", "all lex-representatives of length k"),
        ("normalize", "lex-representative of a word"),
        ("forbidden", "minimal forbidden prefixes after a lex-representative"),
    ]:
        p = actions.add_parser(action, parents=[common], help=help_text)
        p.add_argument("-n", type=int, required=True)
        if action == "enumerate":
            p.add_argument("-k", type=int, required=True)
            p.add_argument("--max-n", type=int)
            p.add_argument("--max-k", type=int)
        else:
            p.add_argument("word")
        p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", parents=[common], help="run the acceptance checks")
    p.add_argument("--only", help="comma-separated check numbers")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        code = args.func(args)
    except UsageError as exc:
        print(f"braidgen: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BraidError as exc:
        print(f"braidgen: error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
