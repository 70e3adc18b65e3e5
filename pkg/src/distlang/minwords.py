"""Finite sets of minimal distinguishing words.

``dist_min`` collects, for every pair of distinct left quotients, the
quasi-lex least word of their symmetric difference.  ``pref_dist_min`` does the
same for right quotients via atom signatures.  The two-sided analogue is only
available by bounded exhaustive search.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .automata import Dfa, from_words, minimize
from .distinguish import InvariantViolation
from .words import access_labels, enumerate_words, qlex_key, qlex_min, word_set


def _pair(p, q):
    return (p, q) if p < q else (q, p)


def pair_min_words(dfa: Dfa) -> dict:
    """Quasi-lex least separating word for every unordered pair of states of the minimal DFA.

    Separation distances come from one backward BFS over the pair graph; the
    words are then rebuilt greedily, taking at each step the smallest symbol
    that keeps the shortest distance.
    """
    m = minimize(dfa)
    n, k = m.n, m.alphabet_size
    preds = {}
    for p in range(n):
        for q in range(p + 1, n):
            for a in range(k):
                t = _pair(m.delta[p][a], m.delta[q][a])
                if t[0] != t[1]:
                    preds.setdefault(t, []).append((p, q))
    dist = {}
    queue = deque()
    for p in range(n):
        for q in range(p + 1, n):
            if (p in m.finals) != (q in m.finals):
                dist[(p, q)] = 0
                queue.append((p, q))
    while queue:
        pq = queue.popleft()
        for pred in preds.get(pq, ()):
            if pred not in dist:
                dist[pred] = dist[pq] + 1
                queue.append(pred)

    words = {}

    def build(pq):
        if pq in words:
            return words[pq]
        chain = []
        cur = pq
        while cur not in words and dist[cur] > 0:
            p, q = cur
            for a in range(k):
                t = _pair(m.delta[p][a], m.delta[q][a])
                if t[0] != t[1] and dist.get(t) == dist[cur] - 1:
                    chain.append((cur, a))
                    cur = t
                    break
        tail = words.get(cur, ())
        for node, a in reversed(chain):
            tail = (a,) + tail
            words[node] = tail
        words.setdefault(pq, tail)
        return words[pq]

    for pq in dist:
        if dist[pq] == 0:
            words[pq] = ()
    for pq in dist:
        build(pq)
    return words


def dist_min(dfa: Dfa) -> tuple:
    """Minimal words distinguishing the left quotients of ``L(dfa)``, in quasi-lex order."""
    return word_set(pair_min_words(dfa).values())


def atom_signatures(dfa: Dfa) -> dict:
    """Reachable atom signatures of the minimal DFA with their least witnesses.

    The signature of ``x`` is the bitset ``{q | reading x from q accepts}``.
    Prepending a symbol ``a`` maps a signature to its preimage under ``a``, so
    signatures are explored layer by layer on word length, keeping for each
    signature the least word of exactly that length.  Once a layer brings no
    new signature, no later layer can.  Returns
    ``{signature: witness}`` for every reachable signature, using the
    quasi-lex least witness overall.
    """
    m = minimize(dfa)
    n, k = m.n, m.alphabet_size

    def preimage(sig, a):
        out = 0
        for q in range(n):
            if sig >> m.delta[q][a] & 1:
                out |= 1 << q
        return out

    start = sum(1 << f for f in m.finals)
    best = {start: ()}
    layer = {start: ()}
    while True:
        nxt = {}
        for sig, w in layer.items():
            for a in range(k):
                s = preimage(sig, a)
                cand = (a,) + w
                if s not in nxt or cand < nxt[s]:
                    nxt[s] = cand
        fresh = {s: w for s, w in nxt.items() if s not in best}
        if not fresh:
            break
        best.update(fresh)
        layer = nxt
    return dict(sorted(best.items(), key=lambda item: qlex_key(item[1])))


def pref_dist_min(dfa: Dfa) -> tuple:
    """Minimal words distinguishing the right quotients of ``L(dfa)``.

    For signatures S and S' the least separating word is the least access word
    of a state in the symmetric difference of S and S'.
    """
    m = minimize(dfa)
    labels = access_labels(m)
    sigs = list(atom_signatures(m))
    out = set()
    for i, s in enumerate(sigs):
        for t in sigs[i + 1:]:
            diff = s ^ t
            out.add(qlex_min(labels[q] for q in range(m.n) if diff >> q & 1))
    return word_set(out)


@dataclass(frozen=True)
class BruteForceResult:
    words: tuple
    complete: bool
    unresolved_pairs: int
    max_len: int


def _context_classes(m: Dfa):
    """Two-sided contexts ``(p, S)``: the words u with ``delta(p, u)`` in S, grouped by equality."""
    sigs = list(atom_signatures(m))
    n, k = m.n, m.alphabet_size
    # Context (p, S) is m started at p with finals S.  Refine all contexts
    # jointly as states of one automaton whose transitions keep S fixed.
    states = [(p, s) for s in sigs for p in range(n)]
    cls = {st: st[1] >> st[0] & 1 for st in states}
    count = len(set(cls.values()))
    while True:
        table = {}
        new = {}
        for p, s in states:
            key = (cls[(p, s)],) + tuple(cls[(m.delta[p][a], s)] for a in range(k))
            new[(p, s)] = table.setdefault(key, len(table))
        cls = new
        if len(table) == count:
            break
        count = len(table)
    reps = {}
    for st in states:
        reps.setdefault(cls[st], st)
    return list(reps.values())


def infix_dist_min_bruteforce(dfa: Dfa, max_len: Optional[int] = None) -> BruteForceResult:
    """Minimal words separating two-sided quotients, by exhaustive search up to ``max_len``.

    Each two-sided quotient class is represented by a context ``(p, S)``.  For
    every pair of distinct classes the least word ``u`` with ``delta(p, u)`` in
    S differing from ``delta(p', u)`` in S' is searched among words up to
    ``max_len``; pairs left unseparated make the result incomplete.
    """
    m = minimize(dfa)
    if max_len is None:
        dmin = dist_min(m)
        max_len = m.n + max((len(w) for w in dmin), default=0) + 2
    reps = _context_classes(m)
    pending = {(i, j) for i in range(len(reps)) for j in range(i + 1, len(reps))}
    found = set()
    for u in enumerate_words(m.alphabet_size, max_len):
        if not pending:
            break
        bits = [bool(s >> m.run(p, u) & 1) for p, s in reps]
        hit = {(i, j) for (i, j) in pending if bits[i] != bits[j]}
        if hit:
            found.add(u)
            pending -= hit
    return BruteForceResult(word_set(found), not pending, len(pending), max_len)


@dataclass(frozen=True)
class MinChain:
    """Iteration of a minimal-word operator.

    ``sets[i]`` is the (i+1)-th iterate; the last entry is the fixed point.
    ``steps`` counts applications, starting from the language itself, until an
    application returns its own input.
    """

    sets: tuple
    steps: int

    @property
    def shrinks(self) -> int:
        return len(self.sets) - 1


def iterate_min(dfa: Dfa, which: str = "left", max_iters: int = 64) -> MinChain:
    ops = {"left": dist_min, "right": pref_dist_min}
    if which not in ops:
        raise ValueError(f"which must be 'left' or 'right', got {which!r}")
    op = ops[which]
    m = minimize(dfa)
    k, names = m.alphabet_size, m.symbol_names
    first = op(m)
    sets = [first]
    steps = None
    if minimize(from_words(first, k, names)) == m:
        steps = 1
    for _ in range(max_iters):
        nxt = op(from_words(sets[-1], k, names))
        if nxt == sets[-1]:
            if steps is None:
                steps = len(sets) + 1
            if which == "left" and m.n >= 2 and len(sets) - 1 > m.n - 2:
                raise InvariantViolation(f"minimal-word chain of {len(sets)} sets for sc={m.n}")
            return MinChain(tuple(sets), steps)
        sets.append(nxt)
    raise RuntimeError(f"minimal-word iteration did not stabilise within {max_iters} steps")


def dist_min_trace(trace) -> list:
    """``dist_min`` of every stage of a left iteration trace, up to its fixed point."""
    return [dist_min(stage) for stage in trace.stages[: trace.fixed_point_index + 1]]
