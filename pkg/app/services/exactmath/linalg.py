# app/services/exactmath/linalg.py
"""Sparse exact linear algebra.

Rows are dicts column -> coefficient with no stored zeros. Coefficients may be
RatFunc (generic) or Fraction (specialized); columns only need a total order.
"""
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from sympy import QQ
from sympy.polys.matrices.sdm import SDM

from app.services.errors import DivisionByZeroError, IndexRangeError, PoleError
from app.services.exactmath.fields import QU, CoefficientField, at
from app.services.exactmath.ratfunc import random_rational

Row = Dict[Hashable, Any]


class Echelon:
    """Incremental row echelon form.

    Every stored row has coefficient 1 at its pivot, and its pivot is its
    smallest column, so elimination against a row never touches smaller columns.
    """

    def __init__(self):
        self.rows: Dict[Hashable, Row] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, vector: Mapping[Hashable, Any]) -> Row:
        v = {k: c for k, c in vector.items() if c}
        while v:
            lead = min(v)
            row = self.rows.get(lead)
            if row is None:
                return v
            factor = v[lead]
            for k, c in row.items():
                nv = v.get(k, 0) - factor * c
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
        return v

    def insert(self, vector: Mapping[Hashable, Any]) -> Optional[Row]:
        """Add vector to the span; return the new echelon row, or None if it was already in the span."""
        v = self.reduce(vector)
        if not v:
            return None
        lead = min(v)
        inv = 1 / v[lead]
        row = {k: c * inv for k, c in v.items()}
        self.rows[lead] = row
        return row

    def contains(self, vector: Mapping[Hashable, Any]) -> bool:
        return not self.reduce(vector)

    def reduced_basis(self) -> List[Row]:
        """Fully reduced rows (zero above every pivot), sorted by pivot."""
        pivots = sorted(self.rows)
        done: Dict[Hashable, Row] = {}
        for p in reversed(pivots):
            row = dict(self.rows[p])
            for q in pivots:
                if q <= p or q not in done or q not in row:
                    continue
                factor = row[q]
                for k, c in done[q].items():
                    nv = row.get(k, 0) - factor * c
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
            done[p] = row
        return [done[p] for p in pivots]


@dataclass
class SparseMatrix:
    rows: int
    cols: int
    entries: Dict[Tuple[int, int], Any] = field(default_factory=dict)

    def __post_init__(self):
        for (i, j), c in list(self.entries.items()):
            if not (0 <= i < self.rows and 0 <= j < self.cols):
                raise IndexRangeError(f"entry ({i}, {j}) outside {self.rows}x{self.cols}")
            if not c:
                del self.entries[(i, j)]

    @classmethod
    def from_rows(cls, rows: Sequence[Mapping[Hashable, Any]]) -> "SparseMatrix":
        columns = sorted({k for r in rows for k in r})
        index = {k: j for j, k in enumerate(columns)}
        entries = {(i, index[k]): c for i, r in enumerate(rows) for k, c in r.items() if c}
        return cls(len(rows), len(columns), entries)

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[Any]]) -> "SparseMatrix":
        cols = len(dense[0]) if dense else 0
        entries = {(i, j): c for i, r in enumerate(dense) for j, c in enumerate(r) if c}
        return cls(len(dense), cols, entries)

    def row_dicts(self) -> List[Row]:
        out: List[Row] = [{} for _ in range(self.rows)]
        for (i, j), c in self.entries.items():
            out[i][j] = c
        return out


def rank(matrix: SparseMatrix) -> int:
    """Exact rank over whatever field the entries live in."""
    ech = Echelon()
    for row in matrix.row_dicts():
        ech.insert(row)
    return len(ech)


def specialized_rank(matrix: SparseMatrix) -> int:
    """Rank of a matrix of rationals, row-reduced with sympy's sparse SDM over QQ."""
    elems: Dict[int, Dict[int, Any]] = {}
    for (i, j), c in matrix.entries.items():
        c = Fraction(c)
        elems.setdefault(i, {})[j] = QQ(c.numerator, c.denominator)
    _, pivots = SDM(elems, (matrix.rows, matrix.cols), QQ).rref()
    return len(pivots)


def span_closure(seed: Iterable[Mapping[Hashable, Any]], step: Callable[[Row], Iterable[Mapping[Hashable, Any]]]) -> List[Row]:
    """Reduced basis of the smallest step-invariant subspace containing seed.

    step must be linear; it is applied to each new echelon row exactly once.
    """
    ech = Echelon()
    queue = deque()
    for v in seed:
        row = ech.insert(v)
        if row is not None:
            queue.append(row)
    while queue:
        v = queue.popleft()
        for w in step(v):
            row = ech.insert(w)
            if row is not None:
                queue.append(row)
    return ech.reduced_basis()


_MAX_DRAWS = 100


def _draw(rng, bound: int, accept: Callable[[Fraction], Any]) -> Tuple[Fraction, Any]:
    for _ in range(_MAX_DRAWS):
        q = random_rational(rng, bound)
        try:
            return q, accept(q)
        except (PoleError, DivisionByZeroError):
            continue
    raise PoleError(f"no pole-free point in {_MAX_DRAWS} draws")


def _with_inverse(q: Fraction) -> CoefficientField:
    point = at(q)
    point.u_inverse  # raises PoleError at u = 0
    return point


def random_fields(rng, count: int, bound: int = 10**6) -> List[CoefficientField]:
    """count random specializations of u, redrawn until u is invertible."""
    return [_draw(rng, bound, _with_inverse)[1] for _ in range(count)]


def matrix_rank(matrix: SparseMatrix, field: CoefficientField) -> int:
    return rank(matrix) if field is QU else specialized_rank(matrix)


def policy_rank(
    measure: Callable[[CoefficientField], int],
    rng,
    points: int = 2,
    bound: int = 10**6,
    exact: bool = False,
    anchors: Sequence[Union[int, Fraction]] = (),
) -> Dict[str, Any]:
    """Generic rank of something computed over Q(u).

    measure(field) returns the rank (or dimension) over that field. Default mode
    evaluates at the anchors, then at `points` random specializations, and takes
    the max: a lower bound that is attained at all but finitely many points. One
    more point is drawn when they disagree. Points where measure hits a pole
    are redrawn. exact=True measures over Q(u) itself.
    """
    if exact:
        return {"rank": measure(QU), "mode": "exact", "points": []}

    ranks: List[int] = []
    used: List[str] = []

    def record(q: Union[int, Fraction]) -> None:
        ranks.append(measure(at(q)))
        used.append(str(q))

    def one_point() -> None:
        _draw(rng, bound, record)

    for q in anchors:
        record(q)
    for _ in range(points if anchors else max(1, points)):
        one_point()
    if len(set(ranks)) > 1:
        one_point()
    return {"rank": max(ranks), "mode": "specialized", "points": used, "ranks": ranks}
