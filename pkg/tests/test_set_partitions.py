from math import factorial

import pytest

from app.services.combinatorics import (
    DisjointSet,
    Permutation,
    SetPartition,
    all_permutations,
    bell_number,
    sp_closure,
    sp_enumerate,
    sp_moebius,
)
from app.services.errors import IndexRangeError, NotRefinementError, SizeMismatchError


def P(n, *blocks):
    return SetPartition.from_blocks(blocks, n)


def test_from_blocks_canonicalizes():
    a = P(4, [3, 1])
    assert a.blocks == ((1, 3), (2,), (4,))
    assert a == SetPartition(4, ((4,), (2,), (3, 1)))
    assert a.to_json() == [[1, 3], [2], [4]]
    assert str(a) == "{{1,3},{2},{4}}"


def test_invalid_blocks():
    with pytest.raises(IndexRangeError):
        SetPartition(3, ((1, 2),))
    with pytest.raises(IndexRangeError):
        SetPartition(2, ((1, 2), (2,)))


def test_disjoint_set():
    ds = DisjointSet(range(1, 6))
    ds.union(1, 3)
    ds.union(3, 5)
    assert ds.find(5) == ds.find(1)
    assert ds.classes() == [[1, 3, 5], [2], [4]]


def test_closure_is_transitive():
    assert sp_closure([(1, 2), (2, 4)], 5) == P(5, [1, 2, 4])
    assert sp_closure([], 3).is_bottom()
    with pytest.raises(IndexRangeError):
        sp_closure([(1, 4)], 3)


def test_join_and_order():
    a, b = P(4, [1, 2]), P(4, [2, 3])
    assert a | b == P(4, [1, 2, 3])
    assert a.join(SetPartition.bottom(4)) == a
    assert a.leq(a | b) and not (a | b).leq(a)
    assert SetPartition.bottom(4).leq(a) and a.leq(SetPartition.top(4))
    with pytest.raises(SizeMismatchError):
        a.join(SetPartition.bottom(3))


def test_join_pair():
    a = P(4, [1, 2])
    assert a.join_pair(2, 4) == P(4, [1, 2, 4])
    assert a.join_pair(1, 2) is a


def test_apply_moves_points():
    a = P(3, [1, 2])
    w = Permutation((2, 3, 1))
    assert a.apply(w) == P(3, [2, 3])


def test_enumeration_counts_and_order():
    assert [bell_number(n) for n in range(1, 6)] == [1, 2, 5, 15, 52]
    parts = sp_enumerate(3)
    assert parts[0].is_bottom() and parts[-1].is_top()
    assert [p.num_blocks() for p in parts] == [3, 2, 2, 2, 1]
    assert len(set(sp_enumerate(4))) == 15


def test_moebius_values():
    top3 = SetPartition.top(3)
    assert sp_moebius(SetPartition.bottom(3), top3) == 2
    assert sp_moebius(P(3, [1, 2]), top3) == -1
    assert sp_moebius(top3, top3) == 1
    assert sp_moebius(SetPartition.bottom(4), SetPartition.top(4)) == -6


def test_moebius_needs_refinement():
    with pytest.raises(NotRefinementError):
        sp_moebius(P(3, [1, 2]), P(3, [2, 3]))


@pytest.mark.parametrize("n", range(1, 6))
def test_moebius_to_top_is_signed_factorial(n):
    top = SetPartition.top(n)
    for a in sp_enumerate(n):
        k = a.num_blocks()
        assert sp_moebius(a, top) == (-1) ** (k - 1) * factorial(k - 1), a


def test_join_is_a_semilattice_operation():
    parts = sp_enumerate(4)
    for a in parts:
        assert a | a == a
        for b in parts:
            assert a | b == b | a
            assert a.leq(a | b) and b.leq(a | b)
            for c in parts:
                assert (a | b) | c == a | (b | c)


def test_apply_is_a_group_action_preserving_block_sizes():
    perms = all_permutations(4)
    for a in sp_enumerate(4):
        assert a.apply(Permutation.identity(4)) == a
        sizes = sorted(len(b) for b in a.blocks)
        for w in perms:
            assert sorted(len(b) for b in a.apply(w).blocks) == sizes
        for v, w in zip(perms, reversed(perms)):
            assert a.apply(v.compose(w)) == a.apply(w).apply(v)
