import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dihedral_soergel.bipoly import BiPoly
from dihedral_soergel.dihedral import (
    GroupElem,
    bruhat_leq,
    elements,
    evaluate_word,
    is_reduced_word,
    lift_r,
    multiply,
    parse_word,
    project,
    reflections_up_to,
    root_coordinates,
    subsequence,
    universal_elements,
)
from dihedral_soergel.qnum import Color, two_color_quantum

G = GroupElem.from_word
X, Y = BiPoly.X, BiPoly.Y


def test_parse_word():
    assert parse_word("e") == ""
    assert parse_word(["s", "t"]) == "st"
    with pytest.raises(ValueError):
        parse_word("sx")


def test_multiply_examples():
    assert multiply(G("s"), G("s")).is_identity
    assert multiply(G("st"), G("ts")).is_identity
    assert G("sts", 3) == G("tst", 3) == GroupElem.longest(3)
    assert GroupElem.longest(3).first == "s"


def test_evaluate_word_examples():
    assert evaluate_word("sts", (1, 0, 1)).is_identity
    assert evaluate_word("sts", (1, 1, 1)) == G("sts")
    assert evaluate_word("sts", "001") == G("s")


def test_bruhat_examples():
    for g in universal_elements(4):
        assert bruhat_leq(GroupElem.identity(), g)
    assert bruhat_leq(G("s"), G("ts"))
    assert not bruhat_leq(G("st"), G("ts"))


def test_bruhat_group_mismatch():
    with pytest.raises(ValueError, match="group mismatch"):
        bruhat_leq(G("s"), G("s", 3))


def test_reflections_up_to():
    assert set(reflections_up_to(1)) == {G("s"), G("t")}
    assert set(reflections_up_to(2)) == {G("s"), G("t")}
    assert set(reflections_up_to(3)) == {G("s"), G("t"), G("sts"), G("tst")}


def test_root_coordinate_examples():
    assert root_coordinates(G("s")) == (1, 0)
    assert root_coordinates(G("sts")) == (X, 1)
    assert root_coordinates(G("tst")) == (1, Y)


def test_project_examples():
    assert project(GroupElem.identity(), 3).is_identity
    assert project(G("sts"), 3).is_longest
    by_law = multiply(multiply(G("s", 3), G("t", 3)), multiply(G("s", 3), G("t", 3)))
    assert project(G("stst"), 3) == by_law == G("ts", 3)


def test_lift_examples():
    assert lift_r(GroupElem.identity(4)).is_identity
    assert lift_r(G("ts", 4)) == G("ts")
    assert lift_r(GroupElem.longest(4)) == G("stst")


def test_subsequence_examples():
    assert subsequence("sts", (1, 1, 1)) == "sts"
    assert subsequence("sts", (0, 0, 0)) == ""
    assert subsequence("stst", "1001") == "st"


def test_reduced_words():
    assert is_reduced_word("stst") and is_reduced_word("")
    assert not is_reduced_word("sts t".replace(" ", "t"))


letters_words = st.text(alphabet="st", max_size=12)


@given(letters_words)
def test_word_times_reverse_is_identity(w):
    g = G(w)
    assert multiply(g, G(w[::-1])).is_identity
    assert multiply(g, g.inverse()).is_identity


def test_associativity_universal():
    elems = universal_elements(6)
    for a, b, c in itertools.product(elems, repeat=3):
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


@pytest.mark.parametrize("m", range(2, 7))
def test_associativity_and_inverse_finite(m):
    elems = elements(m)
    assert len(elems) == 2 * m
    for a, b, c in itertools.product(elems, repeat=3):
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))
    for a in elems:
        assert multiply(a, a.inverse()).is_identity


@pytest.mark.parametrize("m", range(2, 7))
def test_bruhat_partial_order(m):
    elems = elements(m)
    for a in elems:
        assert bruhat_leq(a, a)
    for a, b in itertools.product(elems, repeat=2):
        if a != b and bruhat_leq(a, b):
            assert not bruhat_leq(b, a)
    for a, b, c in itertools.product(elems, repeat=3):
        if bruhat_leq(a, b) and bruhat_leq(b, c):
            assert bruhat_leq(a, c)


def test_property_z():
    elems = universal_elements(8)
    for w in elems:
        for u in "st":
            wu = w.mul_letter(u)
            if wu.length < w.length:
                continue
            for g in elems:
                if bruhat_leq(g, w):
                    assert bruhat_leq(g.mul_letter(u), wu)
                gu = g.mul_letter(u)
                assert bruhat_leq(gu, wu) == (bruhat_leq(g, w) or bruhat_leq(gu, w))


def _act_on_root(word, vec):
    # explicit W-action on coordinates (a, b) of a α_s + b α_t, rightmost letter first
    a, b = vec
    for u in reversed(word):
        if u == "s":  # s(α_s) = -α_s, s(α_t) = α_t + X α_s
            a = -a + X * b
        else:  # t(α_t) = -α_t, t(α_s) = α_s + Y α_t
            b = -b + Y * a
    return a, b


def test_root_coordinates_match_action():
    for refl in reflections_up_to(11):
        word = refl.word
        half = (len(word) - 1) // 2
        x, u = word[:half], word[half]
        simple = (BiPoly.const(1), BiPoly.const(0)) if u == "s" else (BiPoly.const(0), BiPoly.const(1))
        assert _act_on_root(x, simple) == root_coordinates(refl), word


def test_st_power_formula():
    for k in range(6):
        a, b = _act_on_root("st" * k, (BiPoly.const(1), BiPoly.const(0)))
        assert a == two_color_quantum(2 * k + 1, Color.X)
        assert b == two_color_quantum(2 * k, Color.Y)


@pytest.mark.parametrize("m", range(2, 8))
def test_lift_after_project(m):
    for g in universal_elements(m - 1):
        assert lift_r(project(g, m)) == g
