"""The ten acceptance criteria, one test each; results are summarised at the end of the run."""
import time

import pytest

from strategies import seeded

from distlang.automata import equivalent, has_empty_quotient, isomorphic, minimize, universal as sigma_star
from distlang.closures import ClosureKind, combinator, is_closed
from distlang.distinguish import dist, iterate
from distlang.learner import MembershipOracle, learn
from distlang.oracle import random_reduced_dfa
from distlang.minwords import dist_min, dist_min_trace, iterate_min
from distlang.regex import compile_regex
from distlang.verify import cross_check
from distlang.witnesses import (
    EXAMPLE_D3,
    EXAMPLE_D3_D2,
    EXAMPLE_PREF,
    EXAMPLE_PREF_E,
    EXAMPLE_PREF_E2,
    EXAMPLE_SUFF,
    EXAMPLE_SUFF_D2,
    FAMILIES,
    PAIR_L1,
    PAIR_L2,
    generate,
    suffix_complexity,
    suffix_w,
    symmetric,
    universal,
)
from distlang.words import parse_word

SWEEP_SIZE = 1000


@pytest.fixture(scope="module")
def sweep():
    return [minimize(d) for d in seeded(SWEEP_SIZE, max_states=6, k=2)]


@pytest.fixture(scope="module")
def universals():
    return {n: universal(n) for n in range(2, 9)}


def _words(text, names):
    return {parse_word(w, names) for w in text.split()}


@pytest.mark.criterion(1, "sc(D(U_n)) = 2^n - n for n = 2..8 in under 10 s")
def test_criterion_1_universal_witness(universals):
    start = time.perf_counter()
    sizes = {n: dist(dfa, "left").n for n, dfa in universals.items()}
    elapsed = time.perf_counter() - start
    assert sizes == {n: 2**n - n for n in range(2, 9)}
    assert elapsed < 10


@pytest.mark.criterion(2, "state complexity upper bounds on 1000 random DFAs in under 60 s")
def test_criterion_2_upper_bounds(sweep):
    start = time.perf_counter()
    violations = []
    for i, m in enumerate(sweep):
        n = m.n
        sc_d = dist(m, "left").n
        if sc_d > 2**n - n:
            violations.append((i, "D", sc_d))
        if has_empty_quotient(m) and sc_d > 2 ** (n - 1):
            violations.append((i, "D with empty quotient", sc_d))
        if dist(m, "right").n > n:
            violations.append((i, "E"))
        if dist(m, "two-sided").n > 2 ** (n - 1):
            violations.append((i, "F"))
    elapsed = time.perf_counter() - start
    assert violations == []
    assert elapsed < 60


@pytest.mark.criterion(3, "fixed points: D^3 = D^2, F^2 = F unless F is universal, O^3 = O^2")
def test_criterion_3_fixed_points(sweep, universals):
    violations = []
    for i, m in enumerate([*universals.values(), *sweep]):
        d = dist(m, "left")
        d2 = dist(d, "left")
        if not equivalent(dist(d2, "left"), d2):
            violations.append((i, "D3 != D2"))
        f = dist(m, "two-sided")
        if not (f.n == 1 and f.finals) and not equivalent(dist(f, "two-sided"), f):
            violations.append((i, "F2 != F"))
        for kind in ClosureKind:
            o2 = combinator(combinator(m, kind), kind)
            if not equivalent(combinator(o2, kind), o2):
                violations.append((i, f"O3 != O2 for {kind.value}"))
    assert violations == []


@pytest.mark.criterion(4, "D(L) = L iff L is suffix-closed with an empty quotient")
def test_criterion_4_fixed_point_characterisation(sweep, universals):
    mismatches = []
    for i, m in enumerate([*universals.values(), *sweep]):
        fixed = equivalent(dist(m, "left"), m)
        closed_with_sink = is_closed(m, ClosureKind.SUFFIX) and has_empty_quotient(m)
        if fixed != closed_with_sink:
            mismatches.append(i)
    assert mismatches == []

    counter = compile_regex("0*+0*1(1+00*1)*", "01")
    assert is_closed(counter, ClosureKind.SUFFIX)
    assert not has_empty_quotient(counter)
    assert not equivalent(dist(counter, "left"), counter)


@pytest.mark.criterion(5, "|D_min| <= sc - 1, equality on U_n, D_min suffix-closed")
def test_criterion_5_minimal_word_bounds(sweep, universals):
    for n, dfa in universals.items():
        assert len(dist_min(dfa)) == n - 1
    for m in [*universals.values(), *sweep]:
        words = set(dist_min(m))
        assert len(words) <= max(m.n - 1, 0)
        assert all(w[i:] in words for w in words for i in range(len(w) + 1))


@pytest.mark.criterion(6, "W_{n-3} reaches its D_min fixed point in n - 2 steps; chains shrink at most sc - 2 times")
def test_criterion_6_min_chains(sweep, universals):
    for n in range(3, 11):
        chain = iterate_min(suffix_w(n - 3), "left")
        assert chain.steps == n - 2, n
        assert set(chain.sets[-1]) == {(), (1,)}
    for m in [*universals.values(), *sweep]:
        chain = iterate_min(m, "left")
        assert chain.shrinks <= max(m.n - 2, 0)


@pytest.mark.criterion(7, "worked example regressions")
def test_criterion_7_examples():
    # suffix-closed example: D(L) = (0 + 1*10)*, D^2(L) = {epsilon}
    d = dist(EXAMPLE_SUFF, "left")
    assert equivalent(d, compile_regex("(0+1*10)*", "01"))
    assert equivalent(dist(d, "left"), EXAMPLE_SUFF_D2)

    # nine-state example: sc(D) = 7, D != D^2 = D^3, minimal words along the iterates
    trace = iterate(EXAMPLE_D3, "left")
    assert trace.state_complexities[1] == 7
    assert not equivalent(trace.stages[1], trace.stages[2])
    assert equivalent(dist(trace.stages[2], "left"), trace.stages[2])
    assert equivalent(trace.stages[2], EXAMPLE_D3_D2)
    names = EXAMPLE_D3.symbol_names
    expected = [_words("ε 0 1 01 11", names), _words("ε 1 01 11", names), _words("ε 1 11", names)]
    assert [set(s) for s in dist_min_trace(trace)] == expected

    # symmetric group family: D(L) is universal
    for n in range(3, 7):
        assert equivalent(dist(symmetric(n), "left"), sigma_star(2))

    # right-sided example: E(L) and E^2(L) = E^n(L)
    right = iterate(EXAMPLE_PREF, "right")
    assert isomorphic(right.stages[1], minimize(EXAMPLE_PREF_E))
    assert right.stages[1].n == 4
    assert isomorphic(right.fixed_point, minimize(EXAMPLE_PREF_E2))
    assert right.fixed_point_index == 2

    # a pair with the same D but different minimal words
    assert equivalent(dist(PAIR_L1, "left"), sigma_star(2))
    assert equivalent(dist(PAIR_L2, "left"), sigma_star(2))
    assert set(dist_min(PAIR_L1)) == _words("ε b ab aab", PAIR_L1.symbol_names)
    assert set(dist_min(PAIR_L2)) == _words("ε a ba bba", PAIR_L2.symbol_names)


@pytest.mark.criterion(8, "constructions match brute force at depth 6 in under 2 min")
def test_criterion_8_oracle_equivalence(sweep, universals):
    examples = [EXAMPLE_SUFF, EXAMPLE_D3, EXAMPLE_PREF, PAIR_L1, PAIR_L2, *(symmetric(n) for n in range(3, 7))]
    start = time.perf_counter()
    failures = []
    for i, m in enumerate([*universals.values(), *sweep, *examples]):
        failures += [(i, c.name, c.detail) for c in cross_check(m, 6) if not c.ok]
    elapsed = time.perf_counter() - start
    assert failures == []
    assert elapsed < 120


def _learner_inputs():
    for family, (_, lowest) in FAMILIES.items():
        if lowest is None:
            yield family, generate(family)
        elif family == "example_6_pair":
            yield from ((family, generate(family, n)) for n in (1, 2))
        else:
            yield from ((family, generate(family, n)) for n in range(lowest, 9))
    for i in range(200):
        k = 1 + i % 3
        n = 1 + (i // 3) % 8
        yield f"random {i}", minimize(random_reduced_dfa(10_000 + i, n, k))


@pytest.mark.criterion(9, "learner round trip with query length <= sc + d + 1 in under 2 min")
def test_criterion_9_learner():
    start = time.perf_counter()
    failures = []
    count = 0
    for name, dfa in _learner_inputs():
        m = minimize(dfa)
        oracle = MembershipOracle.from_dfa(m)
        result = learn(dist_min(m), oracle)
        count += 1
        if not equivalent(result.dfa, m) or result.dfa.n != m.n:
            failures.append((name, "wrong automaton"))
        if result.longest_query > m.n + result.d + 1:
            failures.append((name, "query too long", result.longest_query))
    elapsed = time.perf_counter() - start
    assert count >= 200 + 7 + 6 + 6 + 6 + 7
    assert failures == []
    assert elapsed < 120


@pytest.mark.criterion(10, "sc(W_m) = m + 3 and sc(D) = 2^(n-1) on the empty-quotient family")
def test_criterion_10_families():
    assert [minimize(suffix_w(m)).n for m in range(8)] == [m + 3 for m in range(8)]
    assert [dist(suffix_complexity(n), "left").n for n in range(3, 9)] == [2 ** (n - 1) for n in range(3, 9)]
