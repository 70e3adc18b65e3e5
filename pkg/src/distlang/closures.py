"""Suffix, prefix and infix closures, and the combinator ``c(L) & c(complement L)``."""
from __future__ import annotations

import enum

from .automata import AND, Dfa, Nfa, complement, coreachable, determinize, empty, equivalent, minimize, product


class ClosureKind(enum.Enum):
    SUFFIX = "suffix"
    PREFIX = "prefix"
    INFIX = "infix"


def closure(dfa: Dfa, kind: ClosureKind) -> Dfa:
    """Minimal DFA of the suffix, prefix or infix closure of ``L(dfa)``.

    Only useful states (those that can still reach a final state) are promoted
    to initial or final; promoting the sink would admit words that die in it.
    """
    kind = ClosureKind(kind)
    m = minimize(dfa)
    useful = coreachable(m, m.finals)
    if not useful:
        return empty(m.alphabet_size, m.symbol_names)
    if kind is ClosureKind.PREFIX:
        return minimize(m.with_finals(useful))
    finals = useful if kind is ClosureKind.INFIX else m.finals
    nfa = Nfa(m.alphabet_size, m.to_nfa().delta, useful, finals, m.symbol_names)
    return minimize(determinize(nfa))


def is_closed(dfa: Dfa, kind: ClosureKind) -> bool:
    return equivalent(dfa, closure(dfa, kind))


def combinator(dfa: Dfa, kind: ClosureKind) -> Dfa:
    """``c(L) & c(complement L)`` for the closure ``c`` named by ``kind``."""
    return minimize(product(closure(dfa, kind), closure(complement(dfa), kind), AND))
