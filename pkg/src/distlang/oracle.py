"""Brute-force reference semantics over bounded word sets, and random DFAs.

Nothing here uses closures, products or minimization: every membership bit is
computed from the input automaton's transition table alone, so these functions
can check the constructions elsewhere in the package.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product as cartesian

from .automata import Dfa, complete, coreachable, reachable
from .words import count_words, enumerate_words


@dataclass(frozen=True)
class BoundedLang:
    """Membership of every word up to ``max_len``; ``bits[i]`` is the i-th word in quasi-lex order."""

    alphabet_size: int
    max_len: int
    bits: tuple

    def __post_init__(self):
        if len(self.bits) != count_words(self.alphabet_size, self.max_len):
            raise ValueError("bit vector length does not match the word count")

    def words(self) -> list:
        return [w for w, b in zip(enumerate_words(self.alphabet_size, self.max_len), self.bits) if b]

    def __len__(self):
        return sum(self.bits)

    def mismatches(self, other: "BoundedLang") -> list:
        return [
            w
            for w, x, y in zip(enumerate_words(self.alphabet_size, self.max_len), self.bits, other.bits)
            if x != y
        ]


def _state_vectors(dfa: Dfa, starts: tuple, max_len: int):
    """For every word w up to ``max_len`` in quasi-lex order, the tuple ``delta(s, w)`` over ``starts``."""
    k = dfa.alphabet_size
    level = [starts]
    for length in range(max_len + 1):
        yield from level
        if length == max_len:
            break
        level = [tuple(dfa.delta[q][a] for q in vec) for vec in level for a in range(k)]


def _bounded(dfa, starts, max_len, predicate):
    bits = tuple(bool(predicate(vec)) for vec in _state_vectors(dfa, starts, max_len))
    return BoundedLang(dfa.alphabet_size, max_len, bits)


def bounded(dfa: Dfa, max_len: int) -> BoundedLang:
    a = complete(dfa)
    return _bounded(a, (a.initial,), max_len, lambda vec: vec[0] in a.finals)


def dist_bruteforce(dfa: Dfa, max_len: int) -> BoundedLang:
    """w is in D(L) iff reading w from the reachable states ends both inside and outside F."""
    a = complete(dfa)
    states = tuple(reachable(a))
    return _bounded(
        a, states, max_len,
        lambda vec: any(q in a.finals for q in vec) and any(q not in a.finals for q in vec),
    )


def pref_dist_bruteforce(dfa: Dfa, max_len: int) -> BoundedLang:
    """w is in E(L) iff from delta(q0, w) both a final and a non-final state are reachable."""
    a = complete(dfa)
    to_final = coreachable(a, a.finals)
    to_nonfinal = coreachable(a, set(range(a.n)) - a.finals)
    return _bounded(a, (a.initial,), max_len, lambda vec: vec[0] in to_final and vec[0] in to_nonfinal)


def infix_dist_bruteforce(dfa: Dfa, max_len: int) -> BoundedLang:
    """w is in F(L) iff some xwy is in L and some x'wy' is not."""
    a = complete(dfa)
    states = tuple(reachable(a))
    to_final = coreachable(a, a.finals)
    to_nonfinal = coreachable(a, set(range(a.n)) - a.finals)
    return _bounded(
        a, states, max_len,
        lambda vec: any(q in to_final for q in vec) and any(q in to_nonfinal for q in vec),
    )


def suff_bruteforce(dfa: Dfa, max_len: int) -> BoundedLang:
    a = complete(dfa)
    return _bounded(a, tuple(reachable(a)), max_len, lambda vec: any(q in a.finals for q in vec))


def pref_bruteforce(dfa: Dfa, max_len: int) -> BoundedLang:
    a = complete(dfa)
    to_final = coreachable(a, a.finals)
    return _bounded(a, (a.initial,), max_len, lambda vec: vec[0] in to_final)


def infix_bruteforce(dfa: Dfa, max_len: int) -> BoundedLang:
    a = complete(dfa)
    to_final = coreachable(a, a.finals)
    return _bounded(a, tuple(reachable(a)), max_len, lambda vec: any(q in to_final for q in vec))


def dist_literal(dfa: Dfa, max_len: int, context_len: int) -> BoundedLang:
    """D(L) straight from its definition, with contexts x, y ranging over words up to ``context_len``.

    Exponential; meant for tiny automata only.  Contexts shorter than the
    number of states reach every reachable state.
    """
    a = complete(dfa)
    contexts = list(enumerate_words(a.alphabet_size, context_len))
    bits = []
    for w in enumerate_words(a.alphabet_size, max_len):
        results = {a.accepts(x + w) for x in contexts}
        bits.append(results == {True, False})
    return BoundedLang(a.alphabet_size, max_len, tuple(bits))


def infix_dist_literal(dfa: Dfa, max_len: int, context_len: int) -> BoundedLang:
    a = complete(dfa)
    contexts = list(enumerate_words(a.alphabet_size, context_len))
    bits = []
    for w in enumerate_words(a.alphabet_size, max_len):
        results = {a.accepts(x + w + y) for x, y in cartesian(contexts, contexts)}
        bits.append(results == {True, False})
    return BoundedLang(a.alphabet_size, max_len, tuple(bits))


def pref_dist_literal(dfa: Dfa, max_len: int, context_len: int) -> BoundedLang:
    a = complete(dfa)
    contexts = list(enumerate_words(a.alphabet_size, context_len))
    bits = []
    for w in enumerate_words(a.alphabet_size, max_len):
        results = {a.accepts(w + y) for y in contexts}
        bits.append(results == {True, False})
    return BoundedLang(a.alphabet_size, max_len, tuple(bits))


def random_reduced_dfa(seed: int, n: int, k: int, final_density: float = 0.5) -> Dfa:
    """Seeded random complete DFA restricted to its reachable part."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    rng = random.Random(seed)
    delta = [tuple(rng.randrange(n) for _ in range(k)) for _ in range(n)]
    finals = {q for q in range(n) if rng.random() < final_density}
    dfa = Dfa(k, delta, 0, finals)
    keep = reachable(dfa)
    index = {q: i for i, q in enumerate(keep)}
    return Dfa(
        k,
        [tuple(index[t] for t in dfa.delta[q]) for q in keep],
        0,
        {index[q] for q in finals if q in index},
    )


def dist_min_bruteforce(dfa: Dfa, max_len: int) -> tuple:
    """First separating word, in enumeration order, for every pair of reachable states."""
    a = complete(dfa)
    states = reachable(a)
    pending = {(p, q) for i, p in enumerate(states) for q in states[i + 1:]}
    found = set()
    for w in enumerate_words(a.alphabet_size, max_len):
        hit = {(p, q) for p, q in pending if (a.run(p, w) in a.finals) != (a.run(q, w) in a.finals)}
        if hit:
            found.add(w)
            pending -= hit
    return tuple(sorted(found, key=lambda w: (len(w), w)))


def pref_dist_min_bruteforce(dfa: Dfa, context_len: int, max_len: int) -> tuple:
    """First w with ``wx in L`` differing from ``wy in L``, over contexts x, y up to ``context_len``."""
    a = complete(dfa)
    contexts = list(enumerate_words(a.alphabet_size, context_len))
    pending = {(i, j) for i in range(len(contexts)) for j in range(i + 1, len(contexts))}
    found = set()
    for w in enumerate_words(a.alphabet_size, max_len):
        member = [a.accepts(w + x) for x in contexts]
        hit = {(i, j) for i, j in pending if member[i] != member[j]}
        if hit:
            found.add(w)
            pending -= hit
    return tuple(sorted(found, key=lambda w: (len(w), w)))
