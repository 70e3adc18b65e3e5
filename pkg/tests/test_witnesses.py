import pytest

from distlang.automata import equivalent, minimize, universal as sigma_star
from distlang.distinguish import dist
from distlang.regex import compile_regex
from distlang.witnesses import (
    EXAMPLE_FIXP,
    FAMILIES,
    generate,
    is_minimal,
    suffix_complexity,
    suffix_w,
    symmetric,
    universal,
)

PARAMETRISED = {name: lowest for name, (_, lowest) in FAMILIES.items() if lowest is not None}


def test_universal_witness_shape():
    u4 = generate("universal_Un", 4)
    assert (u4.n, u4.alphabet_size, u4.finals) == (4, 3, frozenset({3}))
    assert u4.symbol_names == ("a", "b", "c")
    assert u4.delta == ((1, 1, 0), (2, 0, 1), (3, 2, 2), (0, 3, 0))


def test_symmetric_family_a5():
    a5 = generate("symmetric_An", 5)
    assert a5.delta == ((1, 1), (2, 0), (3, 2), (4, 3), (0, 4))
    assert a5.finals == {0}


def test_w0():
    assert equivalent(generate("suffix_Wm", 0), compile_regex("1+@", "01"))


def test_fixed_examples():
    assert generate("example_3_5") is EXAMPLE_FIXP
    assert generate("example_3_5").n == 11
    assert generate("example_3_7").n == 9
    assert generate("example_3_6").n == 3
    assert generate("example_8_1").n == 5
    assert generate("example_6_pair", 1) == generate("example_6_pair_L1")
    assert generate("example_6_pair", 2) == generate("example_6_pair_L2")


@pytest.mark.parametrize("family", sorted(FAMILIES))
def test_every_family_is_minimal_and_complete(family):
    lowest = FAMILIES[family][1]
    params = [None] if lowest is None else range(lowest, lowest + 6)
    if family == "example_6_pair":
        params = [1, 2]
    for n in params:
        dfa = generate(family, n)
        assert dfa.is_complete
        assert is_minimal(dfa)
        assert minimize(dfa).n == dfa.n


@pytest.mark.parametrize("family,lowest", sorted(PARAMETRISED.items()))
def test_parameter_range(family, lowest):
    with pytest.raises(ValueError):
        generate(family, lowest - 1)
    with pytest.raises(ValueError):
        generate(family)


def test_bad_family_and_pair_member():
    with pytest.raises(ValueError):
        generate("no_such_family", 3)
    with pytest.raises(ValueError):
        generate("example_6_pair", 3)


def test_state_complexities():
    assert [universal(n).n for n in range(2, 9)] == list(range(2, 9))
    assert [minimize(suffix_w(m)).n for m in range(8)] == [m + 3 for m in range(8)]


@pytest.mark.parametrize("n", range(3, 7))
def test_symmetric_family_has_universal_dist(n):
    assert equivalent(dist(symmetric(n), "left"), sigma_star(2))


def test_suffix_complexity_family_small_case():
    # for n = 3 the b-edge of s1 goes back to s0
    assert suffix_complexity(3).delta == ((1, 2), (0, 0), (2, 2))
