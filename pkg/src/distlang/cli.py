"""Command-line entry point.

Inputs may be an automaton document path, ``witness:<family>[:<n>]`` or
``regex:<expr>`` (alphabet from ``--alphabet``).  In regular expressions
``+`` is union, ``*`` star, ``@`` the empty word and ``#`` the empty set.

Exit codes: 0 success, 2 I/O failure, 3 invalid input or failed
verification, 4 internal invariant violation.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .automata import Dfa, determinize, minimize
from .distinguish import DistKind, InvariantViolation, NoFixedPoint, classify_fixed_point, dist, iterate
from .doc import DocError, emit_doc, emit_dot, read_doc, read_words
from .experiment import reproduction_tables, to_csv
from .learner import LearnError, MembershipOracle, cover_check, learn
from .minwords import dist_min, iterate_min, pref_dist_min
from .regex import RegexError, compile_regex
from .report import report
from .verify import cross_check
from .witnesses import FAMILIES, generate
from .words import format_word

EXIT_IO = 2
EXIT_INVALID = 3
EXIT_INTERNAL = 4


class VerificationFailed(Exception):
    pass


def load(source: str, alphabet: str = "01") -> Dfa:
    if source.startswith("witness:"):
        family, _, n = source[len("witness:"):].partition(":")
        try:
            n = int(n) if n else None
        except ValueError:
            raise ValueError(f"bad family parameter {n!r}") from None
        return generate(family, n)
    if source.startswith("regex:"):
        return compile_regex(source[len("regex:"):], tuple(alphabet))
    a = read_doc(source)
    return a if isinstance(a, Dfa) else minimize(determinize(a))


def _emit(dfa: Dfa, fmt: str) -> str:
    if fmt == "dot":
        return emit_dot(dfa)
    return emit_doc(dfa)


def _words(words, names) -> str:
    return "{" + ", ".join(format_word(w, names) for w in words) + "}"


def cmd_dist(args):
    dfa = load(args.input, args.alphabet)
    if args.iterate:
        trace = iterate(dfa, args.kind)
        for i, stage in enumerate(trace.stages):
            line = f"stage {i}: sc {stage.n}"
            if trace.kind.value == "left":
                line += "  dist_min " + _words(dist_min(stage), stage.symbol_names)
            print(line)
        print(f"fixed point index {trace.fixed_point_index}")
        result = trace.fixed_point
    else:
        result = dist(dfa, args.kind)
        print(f"sc {result.n}")
    if args.out != "none":
        sys.stdout.write(_emit(result, args.out))


def cmd_dist_min(args):
    dfa = minimize(load(args.input, args.alphabet))
    words = dist_min(dfa) if args.kind == "left" else pref_dist_min(dfa)
    names = dfa.symbol_names
    print(_words(words, names))
    print(f"size {len(words)}")
    if args.kind == "left":
        bound = max(dfa.n - 1, 0)
        ok = len(words) <= bound
        print(f"bound sc-1 = {bound}: {'ok' if ok else 'VIOLATED'}")
        if not ok:
            raise InvariantViolation(f"{len(words)} minimal words exceed sc-1 = {bound}")
    if args.chain:
        chain = iterate_min(dfa, args.kind)
        for i, s in enumerate(chain.sets, start=1):
            print(f"iterate {i}: {_words(s, names)}")
        print(f"steps {chain.steps}")


def cmd_report(args):
    dfa = minimize(load(args.input, args.alphabet))
    fields = report(dfa).as_dict()
    dists = {}
    for kind in DistKind:
        result = dist(dfa, kind)
        dists[kind.value] = {
            "empty": not result.finals,
            "state_complexity": result.n,
            "fixed_point": classify_fixed_point(dfa, kind).is_fixed_point,
        }
    if args.json:
        print(json.dumps({**fields, "dist": dists}, indent=2))
        return
    for key, value in fields.items():
        print(f"{key}: {value}")
    for kind, info in dists.items():
        shape = "empty" if info["empty"] else f"sc {info['state_complexity']}"
        print(f"{kind}: {shape}, fixed point {info['fixed_point']}")


def cmd_witness(args):
    dfa = generate(args.family, args.n)
    if args.emit:
        sys.stdout.write(_emit(dfa, args.emit))
    else:
        print(f"{args.family} n={args.n}: {dfa.n} states over {', '.join(dfa.symbol_names)}")


def cmd_learn(args):
    target = load(args.oracle, args.alphabet)
    dmin = read_words(args.dmin, target.symbol_names)
    oracle = MembershipOracle.from_dfa(target)
    result = learn(dmin, oracle, hard_cap=args.hard_cap)
    print(f"states {result.dfa.n}")
    print(f"cover length {result.cover_length}")
    print(f"d {result.d}")
    print(f"queries {result.queries}")
    print(f"longest query {result.longest_query}")
    if args.check:
        ok = cover_check(result, oracle)
        print(f"cover check {'ok' if ok else 'FAILED'}")
        if not ok:
            raise VerificationFailed("learned automaton disagrees with the oracle")
    if args.emit:
        sys.stdout.write(_emit(result.dfa, args.emit))


def cmd_verify(args):
    failed = 0
    for check in cross_check(load(args.input, args.alphabet), args.depth, args.product_limit):
        status = "SKIP" if check.skipped else "PASS" if check.ok else "FAIL"
        print(f"{status} {check.name}" + (f": {check.detail}" if check.detail else ""))
        failed += not check.ok
    if failed:
        raise VerificationFailed(f"{failed} checks failed")


def cmd_experiment(args):
    text = to_csv(reproduction_tables(args.max_n, args.seed, args.random_rows))
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="distlang",
        description=__doc__.split("\n\n")[0],
        epilog="Inputs: a document path, witness:<family>[:<n>] or regex:<expr> "
        "(+ union, * star, @ empty word, # empty set).",
    )
    parser.add_argument("--alphabet", default="01", help="symbols for regex: inputs (default 01)")
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = ["doc", "dot", "none"]

    p = sub.add_parser("dist", help="distinguishability language D, E or F")
    p.add_argument("input")
    p.add_argument("--kind", choices=["left", "right", "two-sided"], default="left")
    p.add_argument("--iterate", action="store_true", help="iterate to the fixed point")
    p.add_argument("--out", choices=fmt, default="none")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("dist-min", help="minimal distinguishing words")
    p.add_argument("input")
    p.add_argument("--kind", choices=["left", "right"], default="left")
    p.add_argument("--chain", action="store_true", help="iterate the operator to its fixed point")
    p.set_defaults(func=cmd_dist_min)

    p = sub.add_parser("report", help="closure and quotient properties")
    p.add_argument("input")
    p.add_argument("--json", action="store_true", help="print one JSON object")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("witness", help="generate a witness family member")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--emit", choices=["doc", "dot"])
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("learn", help="rebuild a DFA from minimal words and membership queries")
    p.add_argument("--dmin", required=True, help="word file, one word per line")
    p.add_argument("--oracle", required=True, help="automaton answering membership queries")
    p.add_argument("--hard-cap", type=int, default=64)
    p.add_argument("--check", action="store_true", help="run the cover check afterwards")
    p.add_argument("--emit", choices=["doc", "dot"])
    p.set_defaults(func=cmd_learn)

    p = sub.add_parser("verify", help="cross-check all constructions against brute force")
    p.add_argument("input")
    p.add_argument("--depth", type=int, default=6)
    p.add_argument("--product-limit", type=int, default=6, help="largest sc for the n-way quotient product")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("experiment", help="reproduction tables")
    p.add_argument("table", choices=["paper-tables"])
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--random-rows", type=int, default=10)
    p.add_argument("--out", help="CSV path (default stdout)")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (InvariantViolation, NoFixedPoint) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (DocError, RegexError, LearnError, VerificationFailed, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return 0


if __name__ == "__main__":
    sys.exit(main())
