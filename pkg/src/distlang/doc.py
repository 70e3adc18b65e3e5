"""Plain-text automaton documents, DOT export and word files.

Document grammar, one directive per line::

    kind dfa            (or nfa)
    alphabet 0 1        symbol names, whitespace separated
    states 3
    initial 0           dfa only
    initials 0 2        nfa only
    finals 0 2          may be empty
    0 0 1               transitions: source symbol target

Blank lines and lines starting with ``#`` are ignored.  A DFA document must
list exactly one transition per state and symbol.  :func:`emit_doc` writes the
canonical form: directives in the order above, transitions sorted by source,
symbol index and target, ``\\n`` line endings and a trailing newline.
"""
from __future__ import annotations

from collections import defaultdict
from pathlib import Path
from typing import Iterable, Sequence, Union

from .automata import Dfa, Nfa
from .words import format_word, parse_word

Automaton = Union[Dfa, Nfa]


class DocError(ValueError):
    def __init__(self, message: str, line: int = 0):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


def _names(a: Automaton):
    return a.symbol_names or tuple(str(i) for i in range(a.alphabet_size))


def emit_doc(a: Automaton) -> str:
    names = _names(a)
    is_dfa = isinstance(a, Dfa)
    lines = [
        f"kind {'dfa' if is_dfa else 'nfa'}",
        "alphabet " + " ".join(names),
        f"states {a.n}",
    ]
    if is_dfa:
        lines.append(f"initial {a.initial}")
    else:
        lines.append(" ".join(["initials", *map(str, sorted(a.initials))]))
    lines.append(" ".join(["finals", *map(str, sorted(a.finals))]))
    for q, row in enumerate(a.delta):
        for s, targets in enumerate(row):
            if is_dfa:
                targets = () if targets is None else (targets,)
            for t in sorted(targets):
                lines.append(f"{q} {names[s]} {t}")
    return "\n".join(lines) + "\n"


def _int(token, line, what):
    try:
        return int(token)
    except ValueError:
        raise DocError(f"{what} must be an integer, got {token!r}", line) from None


def parse_doc(text: str) -> Automaton:
    header = {}
    transitions = []
    for lineno, raw in enumerate(text.replace("\r\n", "\n").split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, *rest = line.split()
        if head in ("kind", "alphabet", "states", "initial", "initials", "finals"):
            if head in header:
                raise DocError(f"duplicate {head!r} directive", lineno)
            header[head] = (rest, lineno)
        elif len(rest) == 2:
            transitions.append((head, rest[0], rest[1], lineno))
        else:
            raise DocError(f"cannot parse {line!r}", lineno)

    for required in ("kind", "alphabet", "states", "finals"):
        if required not in header:
            raise DocError(f"missing {required!r} directive")
    kind_tokens, kind_line = header["kind"]
    if kind_tokens not in (["dfa"], ["nfa"]):
        raise DocError("kind must be 'dfa' or 'nfa'", kind_line)
    kind = kind_tokens[0]
    names, alpha_line = header["alphabet"]
    if not names:
        raise DocError("empty alphabet", alpha_line)
    if len(set(names)) != len(names):
        raise DocError("duplicate alphabet symbols", alpha_line)
    index = {s: i for i, s in enumerate(names)}
    count_tokens, states_line = header["states"]
    if len(count_tokens) != 1:
        raise DocError("states takes one count", states_line)
    n = _int(count_tokens[0], states_line, "state count")
    if n < 1:
        raise DocError("need at least one state", states_line)

    def state(token, line):
        q = _int(token, line, "state")
        if not 0 <= q < n:
            raise DocError(f"state {q} out of range 0..{n - 1}", line)
        return q

    finals_tokens, finals_line = header["finals"]
    finals = {state(t, finals_line) for t in finals_tokens}

    moves = defaultdict(set)
    for src, sym, dst, line in transitions:
        if sym not in index:
            raise DocError(f"unknown symbol {sym!r}", line)
        key = (state(src, line), index[sym])
        moves[key].add(state(dst, line))
        if kind == "dfa" and len(moves[key]) > 1:
            raise DocError(f"several transitions from state {key[0]} on {sym!r}", line)

    k = len(names)
    if kind == "dfa":
        if "initials" in header:
            raise DocError("a dfa takes 'initial', not 'initials'", header["initials"][1])
        if "initial" not in header:
            raise DocError("missing 'initial' directive")
        tokens, line = header["initial"]
        if len(tokens) != 1:
            raise DocError("initial takes one state", line)
        initial = state(tokens[0], line)
        delta = []
        for q in range(n):
            row = []
            for s in range(k):
                targets = moves.get((q, s))
                if not targets:
                    raise DocError(f"missing transition from state {q} on {names[s]!r}")
                row.append(next(iter(targets)))
            delta.append(row)
        return Dfa(k, delta, initial, finals, tuple(names))

    if "initial" in header:
        raise DocError("an nfa takes 'initials', not 'initial'", header["initial"][1])
    if "initials" not in header:
        raise DocError("missing 'initials' directive")
    tokens, line = header["initials"]
    initials = {state(t, line) for t in tokens}
    delta = [[moves.get((q, s), set()) for s in range(k)] for q in range(n)]
    return Nfa(k, delta, initials, finals, tuple(names))


def read_doc(path) -> Automaton:
    return parse_doc(Path(path).read_text(encoding="utf-8"))


def write_doc(a: Automaton, path) -> None:
    Path(path).write_text(emit_doc(a), encoding="utf-8")


def _quote(text):
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(dfa: Dfa, name: str = "automaton") -> str:
    """Graphviz source; parallel edges share one label listing their symbols."""
    names = _names(dfa)
    lines = [f"digraph {_quote(name)} {{", "  rankdir=LR;", '  __start [shape=point, label=""];']
    for q in range(dfa.n):
        shape = "doublecircle" if q in dfa.finals else "circle"
        lines.append(f"  {q} [shape={shape}];")
    lines.append(f"  __start -> {dfa.initial};")
    for q, row in enumerate(dfa.delta):
        labels = defaultdict(list)
        for s, t in enumerate(row):
            if t is not None:
                labels[t].append(names[s])
        for t in sorted(labels):
            lines.append(f"  {q} -> {t} [label={_quote(','.join(labels[t]))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def format_words(words: Iterable[Sequence[int]], symbol_names: Sequence[str]) -> str:
    return "".join(format_word(w, symbol_names) + "\n" for w in words)


def parse_words(text: str, symbol_names: Sequence[str]) -> list:
    """One word per line; ``ε`` or ``@`` for the empty word; blank and ``#`` lines skipped."""
    words = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            words.append(parse_word(line, symbol_names))
        except ValueError as exc:
            raise DocError(str(exc), lineno) from None
    return words


def read_words(path, symbol_names: Sequence[str]) -> list:
    return parse_words(Path(path).read_text(encoding="utf-8"), symbol_names)


def write_words(words: Iterable[Sequence[int]], symbol_names: Sequence[str], path) -> None:
    Path(path).write_text(format_words(words, symbol_names), encoding="utf-8")
