import itertools

import pytest
from hypothesis import given, strategies as st

from nvalued.errors import UsageError
from nvalued.freeproduct import (
    GroupSpec,
    apply_phi,
    canonical,
    count_compositions,
    enumerate_normal_words,
    from_syllables,
    invert,
    is_normal,
    multiply,
    parse_word,
    reduce,
)

S23 = GroupSpec(2, 3)
SPECS = [GroupSpec(2, 2), GroupSpec(2, 3), GroupSpec(3, 2), GroupSpec(2, 4), GroupSpec(3, 3)]


def raw_words(spec, max_size=10):
    return st.lists(
        st.tuples(st.integers(0, spec.s - 1), st.integers(-2 * spec.m, 2 * spec.m)),
        max_size=max_size,
    )


def specs_and_raw():
    return st.sampled_from(SPECS).flatmap(lambda sp: st.tuples(st.just(sp), raw_words(sp)))


def test_group_spec_validation():
    with pytest.raises(UsageError):
        GroupSpec(1, 3)
    with pytest.raises(UsageError):
        GroupSpec(2, 1)


@pytest.mark.parametrize(
    "raw, expected",
    [
        ([(0, 2), (0, 2)], "a"),
        ([(0, 1), (1, 1), (1, 2)], "a"),
        ([(0, 2), (1, 1), (1, 2), (0, 1)], ""),
    ],
)
def test_reduce_examples(raw, expected):
    assert reduce(raw, S23) == expected


def test_reduce_gen_out_of_range():
    with pytest.raises(UsageError):
        reduce([(2, 1)], S23)


def test_syllables_view():
    w = reduce([(0, 2), (1, 1)], S23)
    assert w.syllables == ((0, 2), (1, 1))
    assert w.letter_length == 3
    assert from_syllables(w.syllables) == w


def _naive_reduce(raw, spec):
    """Repeatedly merge any adjacent equal generators until stable."""
    word = [[g, e % spec.m] for g, e in raw]
    changed = True
    while changed:
        changed = False
        word = [s for s in word if s[1]]
        for i in range(len(word) - 1):
            if word[i][0] == word[i + 1][0]:
                word[i][1] = (word[i][1] + word[i + 1][1]) % spec.m
                del word[i + 1]
                changed = True
                break
    return "".join("abcdefgh"[g] * e for g, e in word if e)


@given(specs_and_raw())
def test_reduce_matches_naive(args):
    spec, raw = args
    w = reduce(raw, spec)
    assert w == _naive_reduce(raw, spec)
    assert is_normal(w, spec)


@given(specs_and_raw())
def test_reduce_idempotent(args):
    spec, raw = args
    w = reduce(raw, spec)
    assert reduce(w.syllables, spec) == w


@pytest.mark.parametrize(
    "word, s, j, expected", [("ab", 2, 1, "ba"), ("aab", 2, 0, "aab"), ("abc", 3, 1, "bca")]
)
def test_apply_phi(word, s, j, expected):
    assert apply_phi(word, j, GroupSpec(s, 3)) == expected


@given(specs_and_raw(), st.integers(-5, 5))
def test_phi_is_homomorphism(args, j):
    spec, raw = args
    half = len(raw) // 2
    u, v = reduce(raw[:half], spec), reduce(raw[half:], spec)
    lhs = multiply(apply_phi(u, j, spec), apply_phi(v, j, spec), spec)
    assert lhs == apply_phi(multiply(u, v, spec), j, spec)
    assert multiply(u, v, spec) == reduce(raw, spec)


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_phi_bijective_on_each_length(spec):
    for k in range(5):
        words = enumerate_normal_words(spec, k)
        for j in range(spec.s):
            assert sorted(apply_phi(w, j, spec) for w in words) == words


def test_canonical_examples():
    assert canonical("bba", S23) == "aab"
    assert canonical("", S23) == ""
    assert canonical("ca", GroupSpec(3, 2)) == "ab"


@given(specs_and_raw(), st.integers(0, 10))
def test_canonical_orbit_invariant(args, j):
    spec, raw = args
    w = reduce(raw, spec)
    c = canonical(w, spec)
    assert canonical(apply_phi(w, j, spec), spec) == c
    assert canonical(c, spec) == c
    if w:
        starting_with_a = {apply_phi(w, i, spec) for i in range(spec.s)}
        starting_with_a = [x for x in starting_with_a if x[0] == "a"]
        assert starting_with_a == [c]


def test_invert_examples():
    assert invert("ab", S23) == "bbaa"
    assert invert("a", GroupSpec(2, 2)) == "a"
    assert invert("aab", S23) == "bba"
    assert multiply("aab", "bba", S23) == ""


@given(specs_and_raw())
def test_invert_cancels(args):
    spec, raw = args
    w = reduce(raw, spec)
    assert multiply(w, invert(w, spec), spec) == ""
    assert multiply(invert(w, spec), w, spec) == ""


def _bruteforce_words(spec, k, first):
    out = []
    for letters in itertools.product(spec.letters, repeat=k):
        w = "".join(letters)
        if is_normal(w, spec) and (not first or not w or w[0] == "a"):
            out.append(w)
    return out


def test_enumerate_examples():
    assert enumerate_normal_words(S23, 3, True) == ["aab", "aba", "abb"]
    assert enumerate_normal_words(S23, 0) == [""]
    assert len(enumerate_normal_words(S23, 5, True)) == 8


@pytest.mark.parametrize("spec", SPECS, ids=str)
@pytest.mark.parametrize("first", [True, False])
def test_enumerate_matches_bruteforce(spec, first):
    for k in range(7):
        assert enumerate_normal_words(spec, k, first) == _bruteforce_words(spec, k, first)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_enumerate_counts_compositions(m):
    spec = GroupSpec(2, m)
    for k in range(1, 12):
        assert len(enumerate_normal_words(spec, k, True)) == count_compositions(k, range(1, m))


def test_count_compositions_small():
    # 4 = 1+1+1+1, 1+1+2, 1+2+1, 2+1+1, 2+2
    assert count_compositions(4, [1, 2]) == 5


def test_parse_word():
    assert parse_word("Λ", S23) == ""
    assert parse_word("aab", S23) == "aab"
    with pytest.raises(UsageError):
        parse_word("aaa", S23)
    with pytest.raises(UsageError):
        parse_word("abc", S23)


def test_words_order_lexicographically():
    words = ["b", "a", "ab", "aab", "", "ba"]
    assert sorted(parse_word(w, S23) for w in words) == ["", "a", "aab", "ab", "b", "ba"]
