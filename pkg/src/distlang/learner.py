"""Rebuild the minimal DFA of a language from its minimal distinguishing words and a membership oracle."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .automata import Dfa, minimize
from .words import enumerate_words


class LearnError(RuntimeError):
    pass


class MembershipOracle:
    """Membership queries with a call counter and the longest word asked so far."""

    def __init__(self, member: Callable[[tuple], bool], alphabet_size: int, symbol_names=None):
        self._member = member
        self.alphabet_size = alphabet_size
        self.symbol_names = symbol_names
        self.queries = 0
        self.longest = 0

    def __call__(self, word: Sequence[int]) -> bool:
        word = tuple(word)
        self.queries += 1
        self.longest = max(self.longest, len(word))
        return bool(self._member(word))

    @classmethod
    def from_dfa(cls, dfa: Dfa) -> "MembershipOracle":
        return cls(dfa.accepts, dfa.alphabet_size, dfa.symbol_names)

    @classmethod
    def from_words(cls, words: Iterable[Sequence[int]], alphabet_size: int, max_trusted_len: int,
                   symbol_names=None) -> "MembershipOracle":
        """Oracle backed by an explicit list of members; longer queries are refused."""
        members = {tuple(w) for w in words}

        def member(w):
            if len(w) > max_trusted_len:
                raise LearnError(f"query of length {len(w)} beyond trusted length {max_trusted_len}")
            return w in members

        return cls(member, alphabet_size, symbol_names)


def equivalent_words(x: Sequence[int], y: Sequence[int], dmin: Iterable[Sequence[int]],
                     oracle: MembershipOracle) -> bool:
    """True iff no word of ``dmin`` separates ``x`` from ``y``.

    Every word of ``dmin`` must agree; a single agreeing word would merge
    words with different quotients.
    """
    x, y = tuple(x), tuple(y)
    return all(oracle(x + tuple(w)) == oracle(y + tuple(w)) for w in dmin)


@dataclass(frozen=True)
class LearnResult:
    dfa: Dfa
    cover_length: int
    d: int
    queries: int
    longest_query: int
    access: tuple


def learn(dmin: Iterable[Sequence[int]], oracle: MembershipOracle, hard_cap: int = 64) -> LearnResult:
    """Enumerate words in quasi-lex order, keeping those inequivalent to every earlier access word.

    Only one-symbol extensions of access words are visited; any other word
    extends a word already merged into a state.  The enumeration stops once a
    whole length level yields no new state.
    """
    dmin = [tuple(w) for w in dmin]
    k = oracle.alphabet_size
    d = max((len(w) for w in dmin), default=0)
    access = [()]
    delta = [[None] * k]
    cover = 0
    queue = deque((0, a) for a in range(k))
    while queue:
        p, a = queue.popleft()
        y = access[p] + (a,)
        if len(y) > hard_cap:
            raise LearnError(f"word length {len(y)} exceeds hard cap {hard_cap}; oracle inconsistent with dmin?")
        for q, x in enumerate(access):
            if equivalent_words(x, y, dmin, oracle):
                delta[p][a] = q
                break
        else:
            q = len(access)
            access.append(y)
            delta.append([None] * k)
            delta[p][a] = q
            cover = len(y)
            queue.extend((q, b) for b in range(k))
    finals = {q for q, x in enumerate(access) if oracle(x)}
    dfa = Dfa(k, delta, 0, finals, oracle.symbol_names)
    if minimize(dfa).n != dfa.n:
        raise LearnError("learned automaton is not minimal; dmin does not separate all quotients")
    return LearnResult(dfa, cover, d, oracle.queries, oracle.longest, tuple(access))


def cover_check(result: LearnResult, oracle: MembershipOracle) -> bool:
    """Agreement with the oracle on every word up to ``n + d + 1``, n the learned state count.

    That range covers the initial segment up to the cover length and every
    word an equivalence test could have needed, so a learned automaton that
    passes is a cover of the oracle's language at that length.  Exponential in
    the bound.
    """
    bound = result.dfa.n + result.d + 1
    return all(result.dfa.accepts(w) == oracle(w) for w in enumerate_words(oracle.alphabet_size, bound))
