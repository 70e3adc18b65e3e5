"""Quasi-lexicographic order on words and bounded enumeration.

A word is a tuple of symbol ordinals.  Shorter words come first; words of the
same length are compared lexicographically by symbol ordinal.
"""
from __future__ import annotations

from collections import deque
from itertools import product
from typing import Iterable, Iterator, Optional, Sequence

EPSILON = ()


def qlex_key(w: Sequence[int]) -> tuple:
    return (len(w), tuple(w))


def compare(u: Sequence[int], v: Sequence[int]) -> int:
    """-1, 0 or 1 as ``u`` precedes, equals or follows ``v``."""
    ku, kv = qlex_key(u), qlex_key(v)
    return (ku > kv) - (ku < kv)


def qlex_min(words: Iterable[Sequence[int]]) -> Optional[tuple]:
    best = None
    for w in words:
        if best is None or qlex_key(w) < qlex_key(best):
            best = tuple(w)
    return best


def word_set(words: Iterable[Sequence[int]]) -> tuple:
    """Deduplicated words, sorted in quasi-lex order."""
    return tuple(sorted({tuple(w) for w in words}, key=qlex_key))


def successor(w: Sequence[int], alphabet_size: int) -> tuple:
    """The next word after ``w`` in quasi-lex order."""
    w = list(w)
    i = len(w) - 1
    while i >= 0 and w[i] == alphabet_size - 1:
        w[i] = 0
        i -= 1
    if i < 0:
        return (0,) * (len(w) + 1)
    w[i] += 1
    return tuple(w)


def enumerate_words(alphabet_size: int, max_len: int) -> Iterator[tuple]:
    """All words of length at most ``max_len`` in ascending quasi-lex order."""
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    for length in range(max_len + 1):
        yield from product(range(alphabet_size), repeat=length)


def count_words(alphabet_size: int, max_len: int) -> int:
    return sum(alphabet_size**i for i in range(max_len + 1))


def access_labels(dfa) -> dict:
    """Map each state to the quasi-lex least word reaching it from the initial state.

    Raises ``ValueError`` if some state is unreachable.
    """
    labels = {dfa.initial: EPSILON}
    queue = deque([dfa.initial])
    while queue:
        q = queue.popleft()
        for a, t in enumerate(dfa.delta[q]):
            if t is not None and t not in labels:
                labels[t] = labels[q] + (a,)
                queue.append(t)
    if len(labels) != dfa.n:
        missing = sorted(set(range(dfa.n)) - labels.keys())
        raise ValueError(f"unreachable states {missing}")
    return labels


def format_word(w: Sequence[int], symbol_names: Optional[Sequence[str]] = None, epsilon: str = "ε") -> str:
    if not w:
        return epsilon
    names = [symbol_names[a] if symbol_names else str(a) for a in w]
    sep = "," if any(len(s) > 1 for s in names) else ""
    return sep.join(names)


def parse_word(text: str, symbol_names: Sequence[str]) -> tuple:
    """Inverse of :func:`format_word`; accepts ``ε``, ``@`` or an empty string for the empty word."""
    text = text.strip()
    if text in ("", "ε", "@"):
        return EPSILON
    index = {name: i for i, name in enumerate(symbol_names)}
    multi = any(len(name) > 1 for name in symbol_names)
    parts = text.split(",") if multi or "," in text else list(text)
    try:
        return tuple(index[p.strip()] for p in parts)
    except KeyError as exc:
        raise ValueError(f"unknown symbol {exc.args[0]!r} in word {text!r}") from None
