import pytest

from app.services.combinatorics import Permutation, all_permutations, permutations_of
from app.services.errors import IndexRangeError


def test_composition_applies_right_factor_first():
    v = Permutation((2, 3, 1))
    w = Permutation((2, 1, 3))
    assert (v * w).images == (3, 2, 1)
    assert (v * w)(1) == v(w(1))


def test_times_simple_swaps_positions():
    assert Permutation((3, 1, 2)).times_simple(1).images == (1, 3, 2)


def test_reduced_word_takes_smallest_descent_first():
    w = Permutation((3, 2, 1))
    assert w.reduced_word() == (1, 2, 1)
    assert Permutation((2, 3, 1)).reduced_word() == (1, 2)
    assert Permutation.from_word(w.reduced_word(), 3) == w


def test_reduced_words_have_length_many_letters():
    for w in all_permutations(4):
        assert len(w.reduced_word()) == w.length()
        assert Permutation.from_word(w.reduced_word(), 4) == w


def test_inverse_and_sign():
    w = Permutation((2, 3, 1))
    assert w * w.inverse() == Permutation.identity(3)
    assert w.sign() == 1
    assert Permutation.simple(2, 3).sign() == -1


def test_all_permutations_sorted_by_length():
    perms = all_permutations(3)
    assert len(perms) == 6
    assert perms[0].is_identity()
    assert [w.length() for w in perms] == [0, 1, 1, 2, 2, 3]


def test_permutations_of_points():
    moved = list(permutations_of([2, 4], 4))
    assert {w.images for w in moved} == {(1, 2, 3, 4), (1, 4, 3, 2)}


def test_invalid_permutations():
    with pytest.raises(IndexRangeError):
        Permutation((1, 1, 2))
    with pytest.raises(IndexRangeError):
        Permutation.simple(3, 3)
