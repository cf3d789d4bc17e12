# app/services/combinatorics/set_partitions.py
"""The lattice of set partitions of {1..n} under refinement."""
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

from app.services.combinatorics.permutations import Permutation
from app.services.errors import IndexRangeError, NotRefinementError, check_same_n


class DisjointSet:
    def __init__(self, items: Iterable[int]):
        self.parent = {x: x for x in items}
        self.rank = {x: 0 for x in self.parent}

    def find(self, x: int) -> int:
        y = self.parent[x]
        if self.parent[y] != y:
            y = self.parent[x] = self.find(y)
        return y

    def union(self, x: int, y: int) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x

    def classes(self) -> List[List[int]]:
        groups: Dict[int, List[int]] = {}
        for x in sorted(self.parent):
            groups.setdefault(self.find(x), []).append(x)
        return list(groups.values())


@dataclass(frozen=True)
class SetPartition:
    n: int
    blocks: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(sorted(tuple(sorted(b)) for b in self.blocks if b))
        covered = sorted(x for b in blocks for x in b)
        if covered != list(range(1, self.n + 1)):
            raise IndexRangeError(f"blocks {blocks} do not partition 1..{self.n}")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: int) -> "SetPartition":
        blocks = [list(b) for b in blocks]
        seen = {x for b in blocks for x in b}
        # unmentioned points become singletons
        blocks += [[x] for x in range(1, n + 1) if x not in seen]
        return cls(n, tuple(tuple(b) for b in blocks))

    @classmethod
    def bottom(cls, n: int) -> "SetPartition":
        return cls(n, tuple((i,) for i in range(1, n + 1)))

    @classmethod
    def top(cls, n: int) -> "SetPartition":
        return cls(n, (tuple(range(1, n + 1)),) if n else ())

    @cached_property
    def _block_index(self) -> Dict[int, int]:
        return {x: k for k, b in enumerate(self.blocks) for x in b}

    def block_of(self, x: int) -> Tuple[int, ...]:
        return self.blocks[self._block_index[x]]

    def same_block(self, i: int, j: int) -> bool:
        return self._block_index[i] == self._block_index[j]

    def num_blocks(self) -> int:
        return len(self.blocks)

    def is_bottom(self) -> bool:
        return len(self.blocks) == self.n

    def is_top(self) -> bool:
        return len(self.blocks) <= 1

    def nontrivial_blocks(self) -> List[Tuple[int, ...]]:
        return [b for b in self.blocks if len(b) > 1]

    def join(self, other: "SetPartition") -> "SetPartition":
        check_same_n(self.n, other.n)
        if other.is_bottom() or self == other:
            return self
        if self.is_bottom():
            return other
        ds = DisjointSet(range(1, self.n + 1))
        for b in self.blocks + other.blocks:
            for x in b[1:]:
                ds.union(b[0], x)
        return SetPartition.from_blocks(ds.classes(), self.n)

    __or__ = join

    def join_pair(self, i: int, j: int) -> "SetPartition":
        if self.same_block(i, j):
            return self
        bi, bj = self.block_of(i), self.block_of(j)
        rest = [b for b in self.blocks if b is not bi and b is not bj]
        return SetPartition(self.n, tuple(rest) + (bi + bj,))

    def leq(self, other: "SetPartition") -> bool:
        """Refinement order: every block of self lies inside a block of other."""
        check_same_n(self.n, other.n)
        return all(other.same_block(b[0], x) for b in self.blocks for x in b[1:])

    def apply(self, w: Permutation) -> "SetPartition":
        check_same_n(self.n, w.n)
        if w.is_identity() or self.is_bottom() or self.is_top():
            return self
        return SetPartition(self.n, tuple(tuple(w(x) for x in b) for b in self.blocks))

    @property
    def sort_key(self) -> Tuple[int, Tuple[Tuple[int, ...], ...]]:
        # finer partitions first
        return (-len(self.blocks), self.blocks)

    def __lt__(self, other: "SetPartition") -> bool:
        return self.sort_key < other.sort_key

    def to_json(self) -> List[List[int]]:
        return [list(b) for b in self.blocks]

    def __str__(self) -> str:
        return "{" + ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "}"


def sp_closure(pairs: Iterable[Sequence[int]], n: int) -> SetPartition:
    """Equivalence classes generated by the relation pairs."""
    ds = DisjointSet(range(1, n + 1))
    for i, j in pairs:
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexRangeError(f"pair ({i}, {j}) out of range for n={n}")
        ds.union(i, j)
    return SetPartition.from_blocks(ds.classes(), n)


@lru_cache(maxsize=None)
def _enumerate(n: int) -> Tuple[SetPartition, ...]:
    # restricted growth strings
    out: List[SetPartition] = []

    def rec(i: int, assign: List[int], k: int) -> None:
        if i > n:
            blocks: List[List[int]] = [[] for _ in range(k)]
            for x, b in enumerate(assign, start=1):
                blocks[b].append(x)
            out.append(SetPartition(n, tuple(tuple(b) for b in blocks)))
            return
        for b in range(k + 1):
            assign.append(b)
            rec(i + 1, assign, max(k, b + 1))
            assign.pop()

    rec(1, [], 0)
    return tuple(sorted(out))


def sp_enumerate(n: int) -> List[SetPartition]:
    """All B_n set partitions of {1..n}, finest first."""
    return list(_enumerate(n))


def bell_number(n: int) -> int:
    return len(_enumerate(n))


@lru_cache(maxsize=None)
def sp_moebius(a: SetPartition, b: SetPartition) -> int:
    """Moebius function of the interval [a, b], by the defining recursion."""
    if not a.leq(b):
        raise NotRefinementError(f"{a} is not a refinement of {b}")
    interval = [c for c in _enumerate(a.n) if a.leq(c) and c.leq(b)]
    mu: Dict[SetPartition, int] = {}
    # sorted finest first, so every c below d is done before d
    for d in interval:
        if d == a:
            mu[d] = 1
        else:
            mu[d] = -sum(v for c, v in mu.items() if c.leq(d))
    return mu[b]
