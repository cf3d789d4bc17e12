from fractions import Fraction

import numpy as np
import pytest

from app.services.errors import IndexRangeError
from app.services.exactmath import (
    QU,
    Echelon,
    RatFunc,
    SparseMatrix,
    at,
    matrix_rank,
    policy_rank,
    random_fields,
    random_rational,
    rank,
    span_closure,
    specialized_rank,
)

u = RatFunc.u()


def test_echelon_detects_dependent_rows():
    ech = Echelon()
    assert ech.insert({0: 1, 1: 2}) is not None
    assert ech.insert({1: 1, 2: 1}) is not None
    assert ech.insert({0: 1, 1: 3, 2: 1}) is None
    assert len(ech) == 2
    assert ech.contains({0: 2, 1: 4})
    assert not ech.contains({2: 1})


def test_reduced_basis_clears_above_pivots():
    ech = Echelon()
    ech.insert({0: Fraction(1), 1: Fraction(1)})
    ech.insert({1: Fraction(1), 2: Fraction(1)})
    assert ech.reduced_basis() == [{0: 1, 2: -1}, {1: 1, 2: 1}]


def test_rank_over_q_of_u():
    # rows (1, u) and (u, u^2) are dependent; (1, 1) is not
    m = SparseMatrix.from_dense([[RatFunc.constant(1), u], [u, u * u], [RatFunc.constant(1), RatFunc.constant(1)]])
    assert rank(m) == 2


def test_specialized_rank_matches_exact_rank():
    dense = [[Fraction(1), Fraction(2), Fraction(3)], [Fraction(2), Fraction(4), Fraction(6)], [Fraction(0), Fraction(1), Fraction(1, 2)]]
    m = SparseMatrix.from_dense(dense)
    assert specialized_rank(m) == rank(m) == 2


def test_sparse_matrix_bounds_and_zero_entries():
    m = SparseMatrix(2, 2, {(0, 0): 1, (1, 1): 0})
    assert m.entries == {(0, 0): 1}
    with pytest.raises(IndexRangeError):
        SparseMatrix(1, 1, {(1, 0): 1})


def test_from_rows_orders_columns():
    m = SparseMatrix.from_rows([{"b": 1}, {"a": 2, "b": 3}])
    assert (m.rows, m.cols) == (2, 2)
    assert m.row_dicts() == [{1: 1}, {0: 2, 1: 3}]


def test_span_closure_of_cyclic_shift():
    def step(row):
        return [{(k + 1) % 3: c for k, c in row.items()}]

    basis = span_closure([{0: 1}], step)
    assert len(basis) == 3


def test_span_closure_stays_in_invariant_subspace():
    # the all-ones vector is fixed by the shift
    def step(row):
        return [{(k + 1) % 3: c for k, c in row.items()}]

    assert span_closure([{0: 1, 1: 1, 2: 1}], step) == [{0: 1, 1: 1, 2: 1}]


def test_span_closure_is_idempotent():
    def step(row):
        return [{(k + 1) % 4: c for k, c in row.items()}]

    basis = span_closure([{0: 1, 2: 1}], step)
    assert len(basis) == 2
    assert span_closure(basis, step) == basis


def _build(field):
    one, x = field.one, field.u
    return SparseMatrix.from_dense([[one, x], [x, x * x - 1]])


def test_policy_rank_specialized_and_exact(rng):
    res = policy_rank(lambda f: matrix_rank(_build(f), f), rng, points=2)
    assert res["rank"] == 2 and res["mode"] == "specialized"
    assert len(res["points"]) == len(res["ranks"]) == 2
    assert policy_rank(lambda f: matrix_rank(_build(f), f), rng, exact=True) == {"rank": 2, "mode": "exact", "points": []}
    assert QU.u == u


def test_policy_rank_evaluates_anchors_first(rng):
    res = policy_rank(lambda f: matrix_rank(_build(f), f), rng, points=1, anchors=(1,))
    assert res["points"][0] == "1"
    assert len(res["ranks"]) == 2


class _ScriptedRng:
    """Replays fixed integer draws, for steering random_rational."""

    def __init__(self, draws):
        self.draws = list(draws)

    def integers(self, low, high=None, size=None):
        return self.draws.pop(0)


def test_random_fields_skip_the_pole_at_zero():
    # first draw is 0/1, the second 2/3
    (field,) = random_fields(_ScriptedRng([0, 1, 2, 3]), 1, bound=10)
    assert field is at(Fraction(2, 3))


def test_policy_rank_redraws_at_poles():
    def measure(field):
        return 1 if field.u_inverse else 0

    res = policy_rank(measure, _ScriptedRng([0, 1, 5, 7]), points=1, bound=10)
    assert res["points"] == ["5/7"] and res["rank"] == 1


def _generic_matrix(rng, size=5, rank_=3):
    def entry():
        return RatFunc.from_coeffs([int(c) for c in rng.integers(-3, 4, size=3)])

    rows = [[entry() for _ in range(size)] for _ in range(rank_)]
    while len(rows) < size:
        a, b = entry(), entry()
        rows.append([a * x + b * y for x, y in zip(rows[0], rows[1])])
    return SparseMatrix.from_dense(rows)


def test_specialized_rank_never_exceeds_exact_rank(rng):
    for _ in range(10):
        m = _generic_matrix(rng)
        exact = rank(m)
        assert exact <= 3
        for _ in range(3):
            q = random_rational(rng, 100)
            specialized = SparseMatrix(m.rows, m.cols, {ij: c.evaluate(q) for ij, c in m.entries.items()})
            assert specialized_rank(specialized) <= exact
        res = policy_rank(lambda f, m=m: matrix_rank(SparseMatrix(m.rows, m.cols, {ij: f.coerce(c) for ij, c in m.entries.items()}), f), rng)
        assert res["rank"] == exact
