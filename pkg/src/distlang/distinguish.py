"""Distinguishability languages D (left), E (right) and F (two-sided).

All three go through :func:`closures.combinator` with the suffix, prefix and
infix closure respectively.  The remaining functions give independent routes
to D (direct subset construction, product over all quotients) used to
cross-check it.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from . import automata
from .automata import XOR, Dfa, complete, determinize, equivalent, isomorphic, minimize, product, reverse, trim
from .closures import ClosureKind, combinator, is_closed


class DistKind(enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    TWO_SIDED = "two-sided"

    @property
    def closure(self) -> ClosureKind:
        return _CLOSURE_OF[self]


_CLOSURE_OF = {
    DistKind.LEFT: ClosureKind.SUFFIX,
    DistKind.RIGHT: ClosureKind.PREFIX,
    DistKind.TWO_SIDED: ClosureKind.INFIX,
}


class InvariantViolation(RuntimeError):
    """A result contradicts a proven property; indicates a bug, not bad input."""


class NoFixedPoint(RuntimeError):
    pass


def _kind(kind) -> DistKind:
    if isinstance(kind, str):
        kind = kind.replace("_", "-")
    return DistKind(kind)


def dist(dfa: Dfa, kind=DistKind.LEFT) -> Dfa:
    return combinator(dfa, _kind(kind).closure)


def right_dist_by_reversal(dfa: Dfa) -> Dfa:
    """E(L) computed as the reversal of D of the reversed language."""
    rev = minimize(determinize(reverse(complete(dfa))))
    return minimize(determinize(reverse(dist(rev, DistKind.LEFT))))


def dist_direct(dfa: Dfa) -> Dfa:
    """D(L) by the subset automaton started at the full state set.

    A subset is accepting when it holds both a final and a non-final state.
    Singleton subsets stay in the construction as non-accepting states and are
    merged away by minimization.
    """
    a = trim(dfa)
    k = a.alphabet_size
    final_mask = sum(1 << f for f in a.finals)
    full = (1 << a.n) - 1
    index = {full: 0}
    subsets = [full]
    delta = []
    i = 0
    while i < len(subsets):
        s = subsets[i]
        row = []
        for sym in range(k):
            image = 0
            for q in range(a.n):
                if s >> q & 1:
                    image |= 1 << a.delta[q][sym]
            j = index.get(image)
            if j is None:
                j = index[image] = len(subsets)
                subsets.append(image)
            row.append(j)
        delta.append(tuple(row))
        i += 1
    finals = {j for j, s in enumerate(subsets) if s & final_mask and s & ~final_mask}
    return minimize(Dfa(k, delta, 0, finals, a.symbol_names))


def dist_by_quotients(dfa: Dfa) -> Dfa:
    """D(L) as (union of quotients) minus (intersection of quotients).

    Runs all states of the minimal DFA in lockstep; a tuple is accepting when
    some but not all components are final.
    """
    m = minimize(dfa)
    k = m.alphabet_size
    start = tuple(range(m.n))
    index = {start: 0}
    tuples = [start]
    delta = []
    i = 0
    while i < len(tuples):
        row = []
        for sym in range(k):
            nxt = tuple(m.delta[q][sym] for q in tuples[i])
            j = index.get(nxt)
            if j is None:
                j = index[nxt] = len(tuples)
                tuples.append(nxt)
            row.append(j)
        delta.append(tuple(row))
        i += 1
    finals = set()
    for j, t in enumerate(tuples):
        hits = sum(q in m.finals for q in t)
        if 0 < hits < len(t):
            finals.add(j)
    return minimize(Dfa(k, delta, 0, finals, m.symbol_names))


def _right_quotient(a: Dfa, word: Sequence[int]) -> Dfa:
    # L w^-1 = {u | uw in L}: same transitions, final where reading w accepts.
    return a.with_finals(q for q in range(a.n) if a.run(q, word) in a.finals)


def dist_pair(dfa: Dfa, x: Sequence[int], y: Sequence[int], kind=DistKind.LEFT) -> Dfa:
    """Words separating ``x`` from ``y``: the symmetric difference of their quotients."""
    kind = _kind(kind)
    a = complete(dfa)
    if kind is DistKind.LEFT:
        left, right = a.with_initial(a.run(a.initial, x)), a.with_initial(a.run(a.initial, y))
    elif kind is DistKind.RIGHT:
        left, right = _right_quotient(a, x), _right_quotient(a, y)
    else:
        raise ValueError("pair languages are defined for left and right kinds only")
    return minimize(product(left, right, XOR))


@dataclass(frozen=True)
class IterationTrace:
    """``stages[i]`` is the minimal DFA of the i-th iterate; ``stages[fixed_point_index]`` is the fixed point."""

    kind: DistKind
    stages: tuple
    fixed_point_index: int

    @property
    def fixed_point(self) -> Dfa:
        return self.stages[self.fixed_point_index]

    @property
    def state_complexities(self) -> list:
        return [s.n for s in self.stages]


def iterate(dfa: Dfa, kind=DistKind.LEFT, max_iters: int = 10) -> IterationTrace:
    """Apply ``dist`` until two consecutive iterates coincide."""
    kind = _kind(kind)
    if max_iters < 2:
        raise ValueError("max_iters must be at least 2")
    stages = [minimize(dfa)]
    for i in range(max_iters):
        nxt = dist(stages[-1], kind)
        if isomorphic(nxt, stages[-1]):
            if kind is DistKind.LEFT and i > 2:
                raise InvariantViolation(f"D iteration fixed only at index {i}")
            return IterationTrace(kind, tuple(stages), i)
        stages.append(nxt)
    raise NoFixedPoint(f"no fixed point for {kind.value} within {max_iters} iterations")


@dataclass(frozen=True)
class FixedPointClass:
    """Fixed-point status of a language under one of D, E, F.

    ``has_empty_quotient`` refers to left quotients for D and F and to right
    quotients for E; ``is_closed`` to the matching closure.
    """

    is_fixed_point: bool
    has_empty_quotient: bool
    is_closed: bool


def has_empty_right_quotient(dfa: Dfa) -> bool:
    return automata.has_empty_quotient(determinize(reverse(complete(dfa))))


def classify_fixed_point(dfa: Dfa, kind=DistKind.LEFT) -> FixedPointClass:
    kind = _kind(kind)
    fixed = equivalent(dist(dfa, kind), dfa)
    if kind is DistKind.RIGHT:
        empty_q = has_empty_right_quotient(dfa)
    else:
        empty_q = automata.has_empty_quotient(dfa)
    return FixedPointClass(fixed, empty_q, is_closed(dfa, kind.closure))
