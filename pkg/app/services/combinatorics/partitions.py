# app/services/combinatorics/partitions.py
"""Integer partitions, dominance and the total order, Young tableaux data."""
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from math import factorial
from typing import List, Sequence, Tuple

from app.services.combinatorics.permutations import Permutation, permutations_of
from app.services.errors import EngineError, SizeMismatchError


@dataclass(frozen=True)
class IntPartition:
    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts) or list(parts) != sorted(parts, reverse=True):
            raise EngineError(f"{list(parts)} is not a weakly decreasing sequence of positive integers")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "IntPartition":
        return cls(tuple(parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "IntPartition":
        if not self.parts:
            return self
        return IntPartition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def partial_sums(self, length: int) -> Tuple[int, ...]:
        out, acc = [], 0
        for k in range(length):
            acc += self.parts[k] if k < len(self.parts) else 0
            out.append(acc)
        return tuple(out)

    @cached_property
    def order_key(self) -> Tuple[int, Tuple[int, ...]]:
        """Sort key realizing the total order: size first, then partial sums."""
        return (self.size, self.partial_sums(self.size))

    def to_json(self) -> List[int]:
        return list(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def dominance_leq(lam: IntPartition, mu: IntPartition) -> bool:
    if lam.size != mu.size:
        raise SizeMismatchError(f"dominance needs equal sizes, got {lam.size} and {mu.size}")
    length = max(len(lam), len(mu))
    return all(a <= b for a, b in zip(lam.partial_sums(length), mu.partial_sums(length)))


def total_lt(lam: IntPartition, mu: IntPartition) -> bool:
    """lam < mu: smaller size first; equal sizes compare partial sums at the first difference."""
    return lam.order_key < mu.order_key


@lru_cache(maxsize=None)
def partitions_of(n: int) -> Tuple[IntPartition, ...]:
    """Partitions of n in increasing total order."""
    out: List[Tuple[int, ...]] = []

    def rec(rest: int, cap: int, acc: List[int]) -> None:
        if rest == 0:
            out.append(tuple(acc))
            return
        for p in range(min(rest, cap), 0, -1):
            acc.append(p)
            rec(rest - p, p, acc)
            acc.pop()

    rec(n, n, [])
    return tuple(sorted((IntPartition(p) for p in out), key=lambda p: p.order_key))


# -------------------------------
# TABLEAUX
# -------------------------------
@dataclass(frozen=True)
class TableauData:
    shape: IntPartition
    row_tableau: Tuple[Tuple[int, ...], ...]
    column_tableau: Tuple[Tuple[int, ...], ...]
    row_stabilizer: Tuple[Permutation, ...]
    col_stabilizer: Tuple[Permutation, ...]
    w_lambda: Permutation


def _young_subgroup(blocks: Sequence[Sequence[int]], n: int) -> Tuple[Permutation, ...]:
    factors = [list(permutations_of(b, n)) for b in blocks if len(b) > 1]
    elems = {Permutation.identity(n)}
    for combo in product(*factors):
        w = Permutation.identity(n)
        for g in combo:
            w = w.compose(g)
        elems.add(w)
    return tuple(sorted(elems))


@lru_cache(maxsize=None)
def tableau_data(lam: IntPartition) -> TableauData:
    n = lam.size
    row_tab: List[Tuple[int, ...]] = []
    k = 1
    for p in lam.parts:
        row_tab.append(tuple(range(k, k + p)))
        k += p
    conj = lam.conjugate().parts
    col_fill = [[0] * p for p in lam.parts]
    k = 1
    for c, h in enumerate(conj):
        for r in range(h):
            col_fill[r][c] = k
            k += 1
    col_tab = tuple(tuple(r) for r in col_fill)
    images = [0] * n
    for r, row in enumerate(row_tab):
        for c, entry in enumerate(row):
            images[entry - 1] = col_tab[r][c]
    columns = [tuple(row_tab[r][c] for r in range(h)) for c, h in enumerate(conj)]
    return TableauData(
        shape=lam,
        row_tableau=tuple(row_tab),
        column_tableau=col_tab,
        row_stabilizer=_young_subgroup(row_tab, n),
        col_stabilizer=_young_subgroup(columns, n),
        w_lambda=Permutation(tuple(images)),
    )


def standard_tableaux_count(lam: IntPartition) -> int:
    """Number of standard Young tableaux of shape lam, by the hook length formula."""
    conj = lam.conjugate().parts
    hooks = 1
    for r, p in enumerate(lam.parts):
        for c in range(p):
            hooks *= (p - c - 1) + (conj[c] - r - 1) + 1
    return factorial(lam.size) // hooks
