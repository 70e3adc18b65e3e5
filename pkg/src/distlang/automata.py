"""Complete DFAs, multi-initial NFAs and the constructions built on them.

States are integers ``0..n-1`` and symbols are ordinals ``0..k-1``.  Subsets of
states are Python ints used as bitsets.  Every value is immutable; every
function returns a new automaton.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

Word = tuple  # tuple[int, ...]

Combine = Callable[[bool, bool], bool]


def AND(x: bool, y: bool) -> bool:
    return x and y


def OR(x: bool, y: bool) -> bool:
    return x or y


def XOR(x: bool, y: bool) -> bool:
    return x != y


def DIFF(x: bool, y: bool) -> bool:
    return x and not y


class AlphabetMismatch(ValueError):
    pass


def _names(symbol_names, alphabet_size):
    if symbol_names is None:
        return None
    names = tuple(str(s) for s in symbol_names)
    if len(names) != alphabet_size:
        raise ValueError(f"{len(names)} symbol names for alphabet of size {alphabet_size}")
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate symbol names {names}")
    return names


@dataclass(frozen=True)
class Dfa:
    """Deterministic automaton over ``alphabet_size`` ordinal symbols.

    ``delta[q][a]`` is the target of state ``q`` on symbol ``a``.  A ``None``
    entry marks a missing transition; such partial automata are accepted on
    construction and filled in by :func:`complete`, which every operation in
    this package applies first.
    """

    alphabet_size: int
    delta: tuple
    initial: int = 0
    finals: frozenset = frozenset()
    symbol_names: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        delta = tuple(tuple(row) for row in self.delta)
        n = len(delta)
        if self.alphabet_size < 1:
            raise ValueError("alphabet must be non-empty")
        if n == 0:
            raise ValueError("a DFA needs at least one state")
        for q, row in enumerate(delta):
            if len(row) != self.alphabet_size:
                raise ValueError(f"state {q} has {len(row)} transitions, expected {self.alphabet_size}")
            for t in row:
                if t is not None and not 0 <= t < n:
                    raise ValueError(f"state {q} has transition to unknown state {t}")
        if not 0 <= self.initial < n:
            raise ValueError(f"initial state {self.initial} out of range")
        finals = frozenset(self.finals)
        if any(not 0 <= f < n for f in finals):
            raise ValueError(f"final states {sorted(finals)} out of range")
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "finals", finals)
        object.__setattr__(self, "symbol_names", _names(self.symbol_names, self.alphabet_size))

    @property
    def n(self) -> int:
        return len(self.delta)

    @property
    def is_complete(self) -> bool:
        return all(t is not None for row in self.delta for t in row)

    def run(self, q: int, word: Iterable[int]) -> Optional[int]:
        for a in word:
            q = self.delta[q][a]
            if q is None:
                return None
        return q

    def accepts(self, word: Iterable[int]) -> bool:
        return self.run(self.initial, word) in self.finals

    def with_initial(self, q: int) -> "Dfa":
        return Dfa(self.alphabet_size, self.delta, q, self.finals, self.symbol_names)

    def with_finals(self, finals: Iterable[int]) -> "Dfa":
        return Dfa(self.alphabet_size, self.delta, self.initial, frozenset(finals), self.symbol_names)

    def to_nfa(self) -> "Nfa":
        delta = tuple(
            tuple(frozenset() if t is None else frozenset((t,)) for t in row) for row in self.delta
        )
        return Nfa(self.alphabet_size, delta, frozenset((self.initial,)), self.finals, self.symbol_names)


@dataclass(frozen=True)
class Nfa:
    """Nondeterministic automaton with a set of initial states (no epsilon moves)."""

    alphabet_size: int
    delta: tuple
    initials: frozenset
    finals: frozenset
    symbol_names: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        delta = tuple(tuple(frozenset(ts) for ts in row) for row in self.delta)
        n = len(delta)
        if self.alphabet_size < 1:
            raise ValueError("alphabet must be non-empty")
        for q, row in enumerate(delta):
            if len(row) != self.alphabet_size:
                raise ValueError(f"state {q} has {len(row)} transition sets, expected {self.alphabet_size}")
            for ts in row:
                if any(not 0 <= t < n for t in ts):
                    raise ValueError(f"state {q} has transition to unknown state in {sorted(ts)}")
        initials, finals = frozenset(self.initials), frozenset(self.finals)
        if any(not 0 <= q < n for q in initials | finals):
            raise ValueError("initial/final state out of range")
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "initials", initials)
        object.__setattr__(self, "finals", finals)
        object.__setattr__(self, "symbol_names", _names(self.symbol_names, self.alphabet_size))

    @property
    def n(self) -> int:
        return len(self.delta)

    def accepts(self, word: Iterable[int]) -> bool:
        current = set(self.initials)
        for a in word:
            current = {t for q in current for t in self.delta[q][a]}
        return not current.isdisjoint(self.finals)


def _check_alphabets(a, b):
    if a.alphabet_size != b.alphabet_size:
        raise AlphabetMismatch(f"alphabet sizes differ: {a.alphabet_size} vs {b.alphabet_size}")


def complete(dfa: Dfa) -> Dfa:
    """Fill missing transitions with a single fresh dead state."""
    if dfa.is_complete:
        return dfa
    dead = dfa.n
    k = dfa.alphabet_size
    delta = [tuple(dead if t is None else t for t in row) for row in dfa.delta]
    delta.append((dead,) * k)
    return Dfa(k, delta, dfa.initial, dfa.finals, dfa.symbol_names)


def reachable(dfa: Dfa) -> list:
    """States reachable from the initial state, in breadth-first order."""
    seen = {dfa.initial}
    order = [dfa.initial]
    queue = deque(order)
    while queue:
        q = queue.popleft()
        for t in dfa.delta[q]:
            if t is not None and t not in seen:
                seen.add(t)
                order.append(t)
                queue.append(t)
    return order


def coreachable(dfa: Dfa, targets: Iterable[int]) -> set:
    """States from which some state of ``targets`` can be reached (including themselves)."""
    preds = [[] for _ in range(dfa.n)]
    for q, row in enumerate(dfa.delta):
        for t in row:
            if t is not None:
                preds[t].append(q)
    seen = set(targets)
    stack = list(seen)
    while stack:
        q = stack.pop()
        for p in preds[q]:
            if p not in seen:
                seen.add(p)
                stack.append(p)
    return seen


def _renumber(dfa: Dfa, keep: Sequence[int]) -> Dfa:
    index = {q: i for i, q in enumerate(keep)}
    delta = [tuple(index[t] for t in dfa.delta[q]) for q in keep]
    finals = frozenset(index[q] for q in dfa.finals if q in index)
    return Dfa(dfa.alphabet_size, delta, index[dfa.initial], finals, dfa.symbol_names)


def is_dead(dfa: Dfa, q: int) -> bool:
    return q not in dfa.finals and all(t == q for t in dfa.delta[q])


def dead_state(dfa: Dfa) -> Optional[int]:
    for q in range(dfa.n):
        if is_dead(dfa, q):
            return q
    return None


def trim(dfa: Dfa) -> Dfa:
    """Reduced form: complete, accessible, with all non-useful states merged into one dead state."""
    dfa = complete(dfa)
    dfa = _renumber(dfa, reachable(dfa))
    useful = coreachable(dfa, dfa.finals)
    useless = [q for q in range(dfa.n) if q not in useful]
    if not useless or (len(useless) == 1 and is_dead(dfa, useless[0])):
        return dfa
    # Collapse every useless state onto one sink, then drop what became unreachable.
    k = dfa.alphabet_size
    if not useful:
        return Dfa(k, [(0,) * k], 0, frozenset(), dfa.symbol_names)
    useful_list = sorted(useful)
    sink = len(useful_list)
    index = {q: i for i, q in enumerate(useful_list)}
    delta = [tuple(index.get(t, sink) for t in dfa.delta[q]) for q in useful_list]
    delta.append((sink,) * k)
    initial = index.get(dfa.initial, sink)
    out = Dfa(k, delta, initial, frozenset(index[q] for q in dfa.finals), dfa.symbol_names)
    return _renumber(out, reachable(out))


def canonical(dfa: Dfa) -> Dfa:
    """Renumber reachable states breadth-first from the initial state, symbols in order."""
    dfa = complete(dfa)
    return _renumber(dfa, reachable(dfa))


def minimize(dfa: Dfa) -> Dfa:
    """The canonical minimal complete DFA of ``L(dfa)`` (Moore refinement)."""
    dfa = canonical(dfa)
    n, k = dfa.n, dfa.alphabet_size
    block = [1 if q in dfa.finals else 0 for q in range(n)]
    count = len(set(block))
    while True:
        signatures = {}
        new_block = []
        for q in range(n):
            sig = (block[q],) + tuple(block[t] for t in dfa.delta[q])
            new_block.append(signatures.setdefault(sig, len(signatures)))
        block = new_block
        if len(signatures) == count:
            break
        count = len(signatures)
    representative = {}
    for q in range(n):
        representative.setdefault(block[q], q)
    delta = [tuple(block[t] for t in dfa.delta[representative[b]]) for b in range(count)]
    finals = frozenset(block[q] for q in dfa.finals)
    quotient = Dfa(k, delta, block[dfa.initial], finals, dfa.symbol_names)
    return canonical(quotient)


def subset_construction(nfa: Nfa) -> tuple:
    """Determinize ``nfa``; returns ``(dfa, subsets)`` with ``subsets[i]`` the bitset of DFA state ``i``.

    Subsets are discovered breadth-first from the set of initial states,
    expanding symbols in ascending order.  The empty subset, when reached, is
    the dead state.
    """
    k = nfa.alphabet_size
    step = [[0] * k for _ in range(nfa.n)]
    for q, row in enumerate(nfa.delta):
        for a, targets in enumerate(row):
            mask = 0
            for t in targets:
                mask |= 1 << t
            step[q][a] = mask
    final_mask = 0
    for f in nfa.finals:
        final_mask |= 1 << f
    start = 0
    for q in nfa.initials:
        start |= 1 << q

    index = {start: 0}
    subsets = [start]
    delta = []
    i = 0
    while i < len(subsets):
        s = subsets[i]
        row = []
        for a in range(k):
            image = 0
            rest = s
            while rest:
                low = rest & -rest
                image |= step[low.bit_length() - 1][a]
                rest ^= low
            j = index.get(image)
            if j is None:
                j = index[image] = len(subsets)
                subsets.append(image)
            row.append(j)
        delta.append(tuple(row))
        i += 1
    finals = frozenset(i for i, s in enumerate(subsets) if s & final_mask)
    return Dfa(k, delta, 0, finals, nfa.symbol_names), subsets


def determinize(nfa: Nfa) -> Dfa:
    return subset_construction(nfa)[0]


def reverse(a) -> Nfa:
    """NFA for the reversal: swap initial and final sets and flip every edge."""
    nfa = a.to_nfa() if isinstance(a, Dfa) else a
    back = [[set() for _ in range(nfa.alphabet_size)] for _ in range(nfa.n)]
    for q, row in enumerate(nfa.delta):
        for sym, targets in enumerate(row):
            for t in targets:
                back[t][sym].add(q)
    return Nfa(nfa.alphabet_size, back, nfa.finals, nfa.initials, nfa.symbol_names)


def product(a: Dfa, b: Dfa, combine: Combine) -> Dfa:
    """Reachable product automaton; a pair is final when ``combine`` of the two finalities holds."""
    _check_alphabets(a, b)
    a, b = complete(a), complete(b)
    k = a.alphabet_size
    start = (a.initial, b.initial)
    index = {start: 0}
    pairs = [start]
    delta = []
    i = 0
    while i < len(pairs):
        p, q = pairs[i]
        row = []
        for s in range(k):
            nxt = (a.delta[p][s], b.delta[q][s])
            j = index.get(nxt)
            if j is None:
                j = index[nxt] = len(pairs)
                pairs.append(nxt)
            row.append(j)
        delta.append(tuple(row))
        i += 1
    finals = frozenset(i for i, (p, q) in enumerate(pairs) if combine(p in a.finals, q in b.finals))
    return Dfa(k, delta, 0, finals, a.symbol_names)


def complement(a: Dfa) -> Dfa:
    a = complete(a)
    return a.with_finals(set(range(a.n)) - a.finals)


def isomorphic(a: Dfa, b: Dfa) -> bool:
    """Same reachable automaton up to state renaming (names of symbols ignored)."""
    _check_alphabets(a, b)
    ca, cb = canonical(a), canonical(b)
    return (ca.delta, ca.initial, ca.finals) == (cb.delta, cb.initial, cb.finals)


def equivalent(a: Dfa, b: Dfa) -> bool:
    _check_alphabets(a, b)
    return isomorphic(minimize(a), minimize(b))


def state_complexity(a) -> int:
    if isinstance(a, Nfa):
        a = determinize(a)
    return minimize(a).n


def universal(alphabet_size: int, symbol_names=None) -> Dfa:
    return Dfa(alphabet_size, [(0,) * alphabet_size], 0, {0}, symbol_names)


def empty(alphabet_size: int, symbol_names=None) -> Dfa:
    return Dfa(alphabet_size, [(0,) * alphabet_size], 0, frozenset(), symbol_names)


def from_words(words: Iterable[Word], alphabet_size: int, symbol_names=None) -> Dfa:
    """Minimal DFA of a finite language, built from its trie."""
    delta = [[None] * alphabet_size]
    finals = set()
    for w in words:
        q = 0
        for a in w:
            if delta[q][a] is None:
                delta[q][a] = len(delta)
                delta.append([None] * alphabet_size)
            q = delta[q][a]
        finals.add(q)
    return minimize(Dfa(alphabet_size, delta, 0, finals, symbol_names))


@dataclass(frozen=True)
class Quotients:
    """States of a minimal DFA read as the left quotients of its language."""

    states: tuple
    access: tuple  # access[q] = quasi-lex least word reaching q
    empty_quotient: Optional[int]

    @property
    def has_empty_quotient(self) -> bool:
        return self.empty_quotient is not None


def quotients(dfa: Dfa) -> Quotients:
    from .words import access_labels

    m = minimize(dfa)
    labels = access_labels(m)
    return Quotients(tuple(range(m.n)), tuple(labels[q] for q in range(m.n)), dead_state(m))


def has_empty_quotient(dfa: Dfa) -> bool:
    return dead_state(minimize(dfa)) is not None
