import itertools

import pytest
from hypothesis import given, settings, strategies as st

from nvalued.coset import CosetGroup, coset_mul, zplus_isomorphism_check
from nvalued.freeproduct import apply_phi
from nvalued.multiset import Multiset, check_associativity, check_inverse, check_unit

AXIOM_SPECS = [(2, 2), (2, 3), (3, 2), (2, 4)]


def test_unit_of_product_is_class_of_empty_word():
    G = CosetGroup(2, 3)
    assert G.unit == ""
    assert G.mul(G.unit, G.element("ab")) == Multiset(["ab", "ab"])


def test_u2_times_u2():
    G = CosetGroup(2, 2)
    # ab.ab = abab;  ab.ba = a(bb)a = aa = 1
    assert G.mul(G.element("ab"), G.element("ab")) == Multiset(["", "abab"])


def test_generator_squared_z3z3():
    G = CosetGroup(2, 3)
    # [a, b]^2 = [[a^2, b^2], [ab, ba]]: two distinct classes
    assert G.mul("a", "a") == Multiset(["aa", "ab"])


@pytest.mark.parametrize("s, m", AXIOM_SPECS + [(3, 3), (4, 2)])
def test_unit_gives_s_copies(s, m):
    G = CosetGroup(s, m)
    for x in G.classes_up_to(3):
        assert G.mul(G.unit, x) == Multiset([x] * s)


def test_coset_mul_matches_group_method():
    G = CosetGroup(3, 3)
    for x, y in itertools.product(G.classes_up_to(3), repeat=2):
        assert coset_mul(x, y, G.spec) == G.mul(x, y)


@pytest.mark.parametrize("s, m", AXIOM_SPECS + [(3, 3)])
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_representative_independence(s, m, data):
    G = CosetGroup(s, m)
    pool = G.classes_up_to(4)
    x = data.draw(st.sampled_from(pool))
    y = data.draw(st.sampled_from(pool))
    i = data.draw(st.integers(0, s - 1))
    j = data.draw(st.integers(0, s - 1))
    assert coset_mul(apply_phi(x, i, G.spec), apply_phi(y, j, G.spec), G.spec) == G.mul(x, y)


@pytest.mark.parametrize("s, m", AXIOM_SPECS)
def test_associativity_short_classes(s, m):
    G = CosetGroup(s, m)
    pool = G.classes_up_to(3)
    for x, y, z in itertools.product(pool, repeat=3):
        assert check_associativity(G, x, y, z), (x, y, z)


@pytest.mark.parametrize("s, m", AXIOM_SPECS)
def test_unit_and_inverse_up_to_length_8(s, m):
    G = CosetGroup(s, m)
    for x in G.classes_up_to(8):
        assert check_unit(G, x), x
        assert check_inverse(G, x), x


def test_one_class_per_length_for_z2z2():
    G = CosetGroup(2, 2)
    for k in range(30):
        assert len(G.classes(k)) == 1


@pytest.mark.parametrize("N", [0, 10, 100])
def test_zplus_isomorphism(N):
    assert zplus_isomorphism_check(N)


def test_group_pickles():
    import pickle

    G = CosetGroup(2, 3)
    assert pickle.loads(pickle.dumps(G)) == G
