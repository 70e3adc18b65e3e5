from hypothesis import strategies as st

from distlang.automata import Dfa
from distlang.oracle import random_reduced_dfa


@st.composite
def dfas(draw, max_states=6, max_symbols=2, min_symbols=None):
    """Complete DFAs with every state reachable, drawn table-first so failures shrink."""
    k = draw(st.integers(min_symbols or max_symbols, max_symbols))
    n = draw(st.integers(1, max_states))
    delta = [tuple(draw(st.integers(0, n - 1)) for _ in range(k)) for _ in range(n)]
    finals = draw(st.sets(st.integers(0, n - 1)))
    dfa = Dfa(k, delta, 0, finals)
    # keep only the reachable part
    seen, stack = {0}, [0]
    while stack:
        for t in delta[stack.pop()]:
            if t not in seen:
                seen.add(t)
                stack.append(t)
    order = sorted(seen)
    index = {q: i for i, q in enumerate(order)}
    return Dfa(k, [tuple(index[t] for t in delta[q]) for q in order], 0, {index[q] for q in finals if q in seen})


def seeded(count, max_states=6, k=2, offset=0):
    """Deterministic list of random reduced DFAs, state counts cycling 1..max_states."""
    return [random_reduced_dfa(offset + i, 1 + i % max_states, k) for i in range(count)]
