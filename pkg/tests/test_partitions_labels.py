from itertools import product

import pytest

from app.services.combinatorics import (
    IntPartition,
    SpechtLabel,
    dominance_leq,
    enumerate_labels,
    partitions_of,
    standard_tableaux_count,
    tableau_data,
    total_lt,
)
from app.services.errors import EngineError, InvalidLabelError, SizeMismatchError

p = IntPartition.of


def test_conjugate():
    assert p(3, 1).conjugate() == p(2, 1, 1)
    assert p(2, 2).conjugate() == p(2, 2)


def test_dominance():
    assert dominance_leq(p(2, 1, 1), p(3, 1))
    assert not dominance_leq(p(3, 1), p(2, 2))
    # incomparable pair at n = 6
    assert not dominance_leq(p(3, 1, 1, 1), p(2, 2, 2)) and not dominance_leq(p(2, 2, 2), p(3, 1, 1, 1))
    with pytest.raises(SizeMismatchError):
        dominance_leq(p(2), p(1, 1, 1))


def test_total_order_compares_sizes_first():
    assert total_lt(p(2, 1), p(1, 1, 1, 1))
    assert not total_lt(p(1, 1, 1, 1), p(2, 1))
    assert total_lt(p(2, 2, 2), p(3, 1, 1, 1))


def test_partitions_in_increasing_total_order():
    assert list(partitions_of(3)) == [p(1, 1, 1), p(2, 1), p(3)]
    assert len(partitions_of(5)) == 7
    parts = partitions_of(4)
    assert all(total_lt(a, b) for a, b in zip(parts, parts[1:]))


def test_invalid_partition():
    with pytest.raises(EngineError):
        IntPartition((1, 2))


def test_tableau_data():
    data = tableau_data(p(2, 1))
    assert data.row_tableau == ((1, 2), (3,))
    assert data.column_tableau == ((1, 3), (2,))
    assert len(data.row_stabilizer) == 2 and len(data.col_stabilizer) == 2
    assert data.w_lambda.images == (1, 3, 2)


def test_hook_length_formula():
    assert [standard_tableaux_count(lam) for lam in partitions_of(4)] == [1, 3, 2, 3, 1]


def test_label_validation():
    lab = SpechtLabel.of(((1,), 1, (1,)), ((2,), 1, (1,)))
    assert lab.n == 3 and lab.num_blocks == 2
    assert lab.block_sizes() == [1, 2]
    assert str(lab) == "(((1),1,(1)), ((2),1,(1)))"
    with pytest.raises(InvalidLabelError):
        SpechtLabel.of(((2,), 1, (1,)), ((1,), 1, (1,)))
    with pytest.raises(InvalidLabelError):
        SpechtLabel.of(((1,), 2, (1,)))
    with pytest.raises(InvalidLabelError):
        lab.validate(4)


def test_labels_n2():
    labels = enumerate_labels(2)
    assert [str(lab) for lab in labels] == [
        "(((2),1,(1)))",
        "(((1,1),1,(1)))",
        "(((1),2,(2)))",
        "(((1),2,(1,1)))",
    ]


def test_labels_n3_order():
    labels = enumerate_labels(3)
    assert len(labels) == 8
    assert [lab.num_blocks for lab in labels] == [1, 1, 1, 2, 2, 3, 3, 3]
    assert labels[0] == SpechtLabel.of(((3,), 1, (1,)))
    assert labels[3] == SpechtLabel.of(((1,), 1, (1,)), ((2,), 1, (1,)))
    assert labels[5] == SpechtLabel.of(((1,), 3, (3,)))


def test_label_counts_and_pullbacks():
    assert [len(enumerate_labels(n)) for n in range(1, 5)] == [1, 4, 8, 22]
    labels = enumerate_labels(3)
    assert sum(lab.is_hecke_pullback() for lab in labels) == 3
    assert sum(lab.is_symmetric_pullback() for lab in labels) == 3
    with pytest.raises(InvalidLabelError):
        enumerate_labels(0)


def test_total_order_is_strict_and_total():
    parts = [lam for k in range(1, 6) for lam in partitions_of(k)]
    for a in parts:
        assert not total_lt(a, a)
        for b in parts:
            if a != b:
                assert total_lt(a, b) != total_lt(b, a), (a, b)
            for c in parts:
                if total_lt(a, b) and total_lt(b, c):
                    assert total_lt(a, c), (a, b, c)


def _label_count_by_multiplicities(n: int) -> int:
    """Sum over all ways to pick a multiplicity m for each lambda with sum m*|lambda| = n,
    weighted by the number of choices of mu for each nonzero m."""
    lams = [lam for k in range(1, n + 1) for lam in partitions_of(k)]
    total = 0
    for ms in product(*(range(n // lam.size + 1) for lam in lams)):
        if sum(m * lam.size for m, lam in zip(ms, lams)) != n:
            continue
        weight = 1
        for m in ms:
            if m:
                weight *= len(partitions_of(m))
        total += weight
    return total


@pytest.mark.parametrize("n", range(1, 5))
def test_label_count_matches_multiplicity_count(n):
    labels = enumerate_labels(n)
    assert len(labels) == _label_count_by_multiplicities(n)
    assert len(set(labels)) == len(labels)
