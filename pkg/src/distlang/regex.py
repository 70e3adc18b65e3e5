"""A tiny regular-expression front-end.

Grammar (whitespace ignored)::

    expr   := term ('+' term)*
    term   := factor factor*
    factor := atom '*'*
    atom   := SYMBOL | '@' | '#' | '(' expr ')'

``+`` is union, juxtaposition is concatenation, ``@`` is the empty word and
``#`` the empty language.  Symbols are single characters from the alphabet.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .automata import Dfa, Nfa, determinize, minimize


class RegexError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Epsilon:
    pass


@dataclass(frozen=True)
class Symbol:
    index: int


@dataclass(frozen=True)
class Union:
    left: object
    right: object


@dataclass(frozen=True)
class Concat:
    left: object
    right: object


@dataclass(frozen=True)
class Star:
    inner: object


class _Parser:
    def __init__(self, text, alphabet):
        self.text = text
        self.alphabet = {name: i for i, name in enumerate(alphabet)}
        self.pos = 0

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else None

    def parse(self):
        node = self.expr()
        if self.peek() is not None:
            raise RegexError(f"unexpected {self.peek()!r}", self.pos)
        return node

    def expr(self):
        node = self.term()
        while self.peek() == "+":
            self.pos += 1
            node = Union(node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek() not in (None, "+", ")"):
            node = Concat(node, self.factor())
        return node

    def factor(self):
        node = self.atom()
        while self.peek() == "*":
            self.pos += 1
            node = Star(node)
        return node

    def atom(self):
        c = self.peek()
        start = self.pos
        if c is None:
            raise RegexError("unexpected end of expression", start)
        self.pos += 1
        if c == "(":
            node = self.expr()
            if self.peek() != ")":
                raise RegexError("missing ')'", self.pos)
            self.pos += 1
            return node
        if c == "@":
            return Epsilon()
        if c == "#":
            return Empty()
        if c in self.alphabet:
            return Symbol(self.alphabet[c])
        if c in "+*)":
            raise RegexError(f"unexpected {c!r}", start)
        raise RegexError(f"unknown symbol {c!r}", start)


def parse_regex(text: str, alphabet: Sequence[str]):
    if any(len(name) != 1 for name in alphabet):
        raise ValueError("regex symbols must be single characters")
    if set(alphabet) & set("+*()@# "):
        raise ValueError("alphabet clashes with regex operators")
    return _Parser(text, list(alphabet)).parse()


class _Thompson:
    def __init__(self, k):
        self.k = k
        self.moves = []  # state -> list of (symbol or None, target)

    def state(self):
        self.moves.append([])
        return len(self.moves) - 1

    def build(self, node):
        """Fragment (start, end) for ``node``."""
        s, e = self.state(), self.state()
        if isinstance(node, Epsilon):
            self.moves[s].append((None, e))
        elif isinstance(node, Symbol):
            self.moves[s].append((node.index, e))
        elif isinstance(node, Union):
            for part in (node.left, node.right):
                ps, pe = self.build(part)
                self.moves[s].append((None, ps))
                self.moves[pe].append((None, e))
        elif isinstance(node, Concat):
            ls, le = self.build(node.left)
            rs, re_ = self.build(node.right)
            self.moves[s].append((None, ls))
            self.moves[le].append((None, rs))
            self.moves[re_].append((None, e))
        elif isinstance(node, Star):
            is_, ie = self.build(node.inner)
            self.moves[s] += [(None, is_), (None, e)]
            self.moves[ie] += [(None, is_), (None, e)]
        return s, e

    def closure(self, q):
        seen = {q}
        stack = [q]
        while stack:
            p = stack.pop()
            for sym, t in self.moves[p]:
                if sym is None and t not in seen:
                    seen.add(t)
                    stack.append(t)
        return seen


def regex_to_nfa(node, alphabet_size: int, symbol_names=None) -> Nfa:
    """Thompson construction followed by epsilon elimination."""
    t = _Thompson(alphabet_size)
    start, end = t.build(node)
    closures = [t.closure(q) for q in range(len(t.moves))]
    delta = []
    for q in range(len(t.moves)):
        row = [set() for _ in range(alphabet_size)]
        for p in closures[q]:
            for sym, target in t.moves[p]:
                if sym is not None:
                    row[sym] |= closures[target]
        delta.append(row)
    finals = {q for q in range(len(t.moves)) if end in closures[q]}
    initials = closures[start]
    return Nfa(alphabet_size, delta, initials, finals, symbol_names)


def regex_to_dfa(node, alphabet: Sequence[str]) -> Dfa:
    return minimize(determinize(regex_to_nfa(node, len(alphabet), tuple(alphabet))))


def compile_regex(text: str, alphabet: Sequence[str]) -> Dfa:
    return regex_to_dfa(parse_regex(text, alphabet), alphabet)
