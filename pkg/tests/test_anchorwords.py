import pytest
from hypothesis import given, settings, strategies as st

from ferrers_tilings.anchorwords import (
    INF,
    AnchorWord,
    anchor_word_count,
    count_faultlines,
    cylindric_poly_bruteforce,
    enumerate_anchor_words,
    enumerate_cylindric_words,
    is_valid_word,
    refined_last_letter_polys,
    tiling_poly_bruteforce,
)
from ferrers_tilings.errors import EnumerationCapExceeded
from ferrers_tilings.exactpoly import IntPoly
from ferrers_tilings.shapes import make_params


def test_counts_from_small_examples():
    assert anchor_word_count(make_params((2, 1), 3), 5) == 69
    assert anchor_word_count(make_params((3, 1, 1), 3), 4) == 10
    assert list(enumerate_anchor_words(make_params((2, 1), 2), 0)) == [AnchorWord(())]


def test_tiling_polys():
    assert tiling_poly_bruteforce(make_params((2, 1), 2), 3) == IntPoly((1, 4, 1))
    assert tiling_poly_bruteforce(make_params((2, 2), 3), 2) == IntPoly((1, 3))
    assert tiling_poly_bruteforce(make_params((3, 2, 1), 3), 0) == IntPoly((1,))


def test_words_are_valid_and_sorted():
    params = make_params((3, 2, 1), 3)
    words = list(enumerate_anchor_words(params, 6))
    assert all(is_valid_word(params, w.letters) for w in words)
    keys = [tuple(99 if a == INF else a for a in w.letters) for w in words]
    assert keys == sorted(keys)
    assert len(set(words)) == len(words)


def test_word_string_round_trip():
    w = AnchorWord.parse("1-3--")
    assert w.letters == (1, INF, 3, INF, INF)
    assert str(w) == "1-3--" and w.bigtiles == 2 and w.tile_rows() == [1, 3]


def test_cap_is_enforced():
    with pytest.raises(EnumerationCapExceeded):
        tiling_poly_bruteforce(make_params((2, 1), 3), 8, cap=100)


def test_cap_env_override(monkeypatch):
    monkeypatch.setenv("FERRERS_ENUM_CAP", "5")
    with pytest.raises(EnumerationCapExceeded):
        tiling_poly_bruteforce(make_params((2, 1), 2), 5)


def test_count_faultlines():
    assert count_faultlines((INF, INF, INF), 2) == 2
    assert count_faultlines((1, INF, INF), 2) == 0
    assert count_faultlines((1, INF, INF, INF, INF), 2) == 2


def test_refined_last_letter_polys():
    q = refined_last_letter_polys(3, 5)
    assert q[0] == IntPoly((1, 12, 36, 20))
    assert q[1] == IntPoly((0, 1, 9, 15, 1))
    assert q[2] == IntPoly((0, 1, 10, 21, 4))
    assert q[3] == IntPoly((0, 1, 11, 28, 10))
    t = IntPoly((0, 1))
    assert refined_last_letter_polys(2, 1) == [IntPoly((1,)), t, t]


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.integers(1, 7))
def test_refined_polys_sum_to_hook_tilings(d, n):
    # a word of length n ending in INF is a tiling word of length n for (h,1), d=h
    q = refined_last_letter_polys(d, n)
    assert q[0] == tiling_poly_bruteforce(make_params((d, 1), d), n)


def test_cylindric_counts():
    lucas = make_params((1, 1), 1)
    assert len(list(enumerate_cylindric_words(lucas, 2))) == 3
    assert len(list(enumerate_cylindric_words(lucas, 5))) == 11
    assert cylindric_poly_bruteforce(make_params((2, 1), 2), 2)(1) == 5


def test_cylindric_words_satisfy_modular_constraints():
    params = make_params((3, 2, 1), 3)
    for w in enumerate_cylindric_words(params, 5):
        assert is_valid_word(params, w.letters, cylindric=True)
