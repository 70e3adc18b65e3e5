"""Generators for the automaton families and worked examples used as test witnesses.

Fixed examples number their states 0, 1, ... and the comments call them
S0, S1, ....  Letters map to ordinals a->0, b->1, c->2; binary digits map to
themselves.
"""
from __future__ import annotations

from .automata import Dfa, minimize

BINARY = ("0", "1")
AB = ("a", "b")
ABC = ("a", "b", "c")


def universal(n: int) -> Dfa:
    """Universal witness U_n over {a, b, c}; final state n-1."""
    if n < 2:
        raise ValueError("universal witness needs n >= 2")
    delta = []
    for i in range(n):
        on_a = (i + 1) % n
        on_b = {0: 1, 1: 0}.get(i, i)
        on_c = 0 if i == n - 1 else i
        delta.append((on_a, on_b, on_c))
    return Dfa(3, delta, 0, {n - 1}, ABC)


def symmetric(n: int) -> Dfa:
    """A_n: 0 is an n-cycle, 1 swaps states 0 and 1; final {0}.

    The cycle runs through all n states, so both letters are permutations.
    """
    if n < 3:
        raise ValueError("symmetric family needs n >= 3")
    delta = [((i + 1) % n, {0: 1, 1: 0}.get(i, i)) for i in range(n)]
    return Dfa(2, delta, 0, {0}, BINARY)


def suffix_w(m: int) -> Dfa:
    """W_m = {0^i 1 | i <= m} + {epsilon}, the suffix closure of 0^m 1."""
    if m < 0:
        raise ValueError("W_m needs m >= 0")
    accept, dead = m + 1, m + 2
    delta = []
    for i in range(m + 1):
        delta.append((i + 1 if i < m else dead, accept))
    delta.append((dead, dead))
    delta.append((dead, dead))
    return Dfa(2, delta, 0, {0, accept}, BINARY)


def suffix_complexity(n: int) -> Dfa:
    """Witness for sc(D(L)) = 2^(n-1) when L has an empty quotient (states s_0..s_{n-1}).

    a: s_i -> s_{i+1}, s_{n-2} -> s_0.  b: s_0 -> s_{n-1}, s_1 -> s_0, loops
    elsewhere.  s_{n-1} is the dead state; s_0 is the only final state.  For
    n = 3, s_1 is also s_{n-2} and its b-edge goes to s_0.
    """
    if n < 3:
        raise ValueError("suffix complexity family needs n >= 3")
    dead = n - 1
    delta = []
    for i in range(n - 1):
        on_a = 0 if i == n - 2 else i + 1
        on_b = {0: dead, 1: 0}.get(i, i)
        delta.append((on_a, on_b))
    delta.append((dead, dead))
    return Dfa(2, delta, 0, {0}, AB)


def prefix_family(n: int) -> Dfa:
    """L_n = {a^i | i <= n-2} over the unary alphabet {a}; sc = n."""
    if n < 2:
        raise ValueError("prefix family needs n >= 2")
    delta = [(i + 1,) for i in range(n - 1)] + [(n - 1,)]
    return Dfa(1, delta, 0, set(range(n - 1)), ("a",))


# ((0+1)(0+1))*(epsilon+1): S0 -0-> S1, S0 -1-> S2, S1 -0,1-> S0, S2 -0,1-> S0.
EXAMPLE_SUFF = Dfa(2, [(1, 2), (0, 0), (0, 0)], 0, {0, 2}, BINARY)
# Its D(L) = (0 + 1*10)*: S0 -0-> S0, S0 -1-> S1, S1 -0-> S0, S1 -1-> S1.
EXAMPLE_SUFF_D = Dfa(2, [(0, 1), (0, 1)], 0, {0}, BINARY)
# D^n(L) = {epsilon}.
EXAMPLE_SUFF_D2 = Dfa(2, [(1, 1), (1, 1)], 0, {0}, BINARY)

# Nine-state DFA whose D(L) has 7 states and D(L) != D^2(L) = D^3(L).
# Finals S2, S4, S5, S8.
EXAMPLE_D3 = Dfa(
    2,
    [
        (1, 5),  # S0 -0-> S1, -1-> S5
        (2, 1),  # S1 -0-> S2, -1-> S1
        (2, 3),  # S2 -0-> S2, -1-> S3
        (4, 4),  # S3 -0,1-> S4
        (4, 1),  # S4 -0-> S4, -1-> S1
        (6, 6),  # S5 -0,1-> S6
        (6, 7),  # S6 -0-> S6, -1-> S7
        (8, 7),  # S7 -0-> S8, -1-> S7
        (8, 5),  # S8 -0-> S8, -1-> S5
    ],
    0,
    {2, 4, 5, 8},
    BINARY,
)
# D^2(L): words avoiding 111.  S3 is the sink.
EXAMPLE_D3_D2 = Dfa(2, [(0, 1), (0, 2), (0, 3), (3, 3)], 0, {0, 1, 2}, BINARY)

# Eleven-state DFA with L != D(L) and D(D(L)) = D(L).  Non-final: S7, S8, S10.
EXAMPLE_FIXP = Dfa(
    2,
    [
        (1, 0),  # S0 -0-> S1, -1-> S0
        (1, 2),  # S1 -0-> S1, -1-> S2
        (6, 3),  # S2 -0-> S6, -1-> S3
        (1, 4),  # S3 -0-> S1, -1-> S4
        (5, 1),  # S4 -0-> S5, -1-> S1
        (5, 6),  # S5 -0-> S5, -1-> S6
        (7, 8),  # S6 -0-> S7, -1-> S8
        (7, 8),  # S7 -0-> S7, -1-> S8
        (6, 9),  # S8 -0-> S6, -1-> S9
        (10, 10),  # S9 -0,1-> S10
        (5, 6),  # S10 -0-> S5, -1-> S6
    ],
    0,
    {0, 1, 2, 3, 4, 5, 6, 9},
    BINARY,
)
# Its D(L): five states, S4 the sink.
EXAMPLE_FIXP_D = Dfa(
    2, [(1, 0), (1, 2), (3, 1), (4, 4), (4, 4)], 0, {0, 1, 2, 3}, BINARY
)

# Right distinguishability example: L, E(L) (4 states), E^2(L) = E^n(L) (3 states).
EXAMPLE_PREF = Dfa(
    2,
    [
        (1, 3),  # S0 -0-> S1, -1-> S3
        (2, 1),  # S1 -0-> S2, -1-> S1
        (1, 2),  # S2 -0-> S1, -1-> S2
        (0, 4),  # S3 -0-> S0, -1-> S4
        (4, 4),  # S4 sink
    ],
    0,
    {0, 2},
    BINARY,
)
EXAMPLE_PREF_E = Dfa(2, [(1, 2), (1, 1), (0, 3), (3, 3)], 0, {0, 1, 2}, BINARY)
EXAMPLE_PREF_E2 = Dfa(2, [(2, 1), (0, 2), (2, 2)], 0, {0, 1}, BINARY)

# aa{a,b}*b a^n: after "aa", any word containing a b.
PAIR_L1 = Dfa(2, [(1, 4), (2, 4), (2, 3), (3, 3), (4, 4)], 0, {3}, AB)
# bb{a,b}*a b^n: the mirror image under a <-> b.
PAIR_L2 = Dfa(2, [(4, 1), (4, 2), (3, 2), (3, 3), (4, 4)], 0, {3}, AB)


def pair(n: int) -> Dfa:
    """PAIR_L1 for n = 1, PAIR_L2 for n = 2."""
    if n not in (1, 2):
        raise ValueError("pair member must be 1 or 2")
    return PAIR_L1 if n == 1 else PAIR_L2


def _fixed(dfa):
    def make(n=None):
        return dfa

    return make


FAMILIES = {
    "universal_Un": (universal, 2),
    "symmetric_An": (symmetric, 3),
    "suffix_Wm": (suffix_w, 0),
    "suffix_complexity_family": (suffix_complexity, 3),
    "prefix_family": (prefix_family, 2),
    "example_3_5": (_fixed(EXAMPLE_FIXP), None),
    "example_3_6": (_fixed(EXAMPLE_SUFF), None),
    "example_3_7": (_fixed(EXAMPLE_D3), None),
    "example_8_1": (_fixed(EXAMPLE_PREF), None),
    "example_6_pair": (pair, 1),
    "example_6_pair_L1": (_fixed(PAIR_L1), None),
    "example_6_pair_L2": (_fixed(PAIR_L2), None),
}


def generate(family: str, n=None) -> Dfa:
    """Automaton of ``family``; ``n`` is required for parameterised families."""
    try:
        make, lowest = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    if lowest is None:
        return make()
    if n is None:
        raise ValueError(f"family {family} needs a parameter")
    if make is pair and n not in (1, 2):
        raise ValueError(f"family {family} takes parameter 1 or 2, got {n}")
    if n < lowest:
        raise ValueError(f"family {family} needs parameter >= {lowest}, got {n}")
    return make(n)


def is_minimal(dfa: Dfa) -> bool:
    return minimize(dfa).n == dfa.n
