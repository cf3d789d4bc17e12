# app/services/combinatorics/labels.py
"""Labels of the simple modules: sequences of triples (lambda, m, mu)."""
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, List, Sequence, Tuple

from app.services.combinatorics.partitions import IntPartition, partitions_of, total_lt
from app.services.errors import InvalidLabelError


@dataclass(frozen=True)
class LabelEntry:
    lam: IntPartition
    m: int
    mu: IntPartition

    @property
    def order_key(self) -> Tuple[Any, ...]:
        return (self.lam.order_key, self.m, self.mu.order_key)

    def to_json(self) -> Dict[str, Any]:
        return {"lambda": self.lam.to_json(), "m": self.m, "mu": self.mu.to_json()}


@dataclass(frozen=True)
class SpechtLabel:
    entries: Tuple[LabelEntry, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        if not entries:
            raise InvalidLabelError("a label needs at least one triple")
        for e in entries:
            if e.m < 1 or e.mu.size != e.m:
                raise InvalidLabelError(f"|mu| must equal m >= 1, got m={e.m}, mu={e.mu}")
        for a, b in zip(entries, entries[1:]):
            if not total_lt(a.lam, b.lam):
                raise InvalidLabelError(f"lambdas must increase strictly: {a.lam} then {b.lam}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, *triples: Tuple[Sequence[int], int, Sequence[int]]) -> "SpechtLabel":
        """SpechtLabel.of(((2, 1), 1, (1,)), ...)"""
        return cls(tuple(LabelEntry(IntPartition(tuple(l)), m, IntPartition(tuple(u))) for l, m, u in triples))

    @property
    def n(self) -> int:
        return sum(e.m * e.lam.size for e in self.entries)

    @property
    def num_blocks(self) -> int:
        return sum(e.m for e in self.entries)

    def block_sizes(self) -> List[int]:
        return [e.lam.size for e in self.entries for _ in range(e.m)]

    def is_hecke_pullback(self) -> bool:
        return len(self.entries) == 1 and self.entries[0].m == 1

    def is_symmetric_pullback(self) -> bool:
        return len(self.entries) == 1 and self.entries[0].lam.parts == (1,)

    def validate(self, n: int) -> None:
        if self.n != n:
            raise InvalidLabelError(f"label {self} has size {self.n}, expected {n}")

    def to_json(self) -> List[Dict[str, Any]]:
        return [e.to_json() for e in self.entries]

    def __str__(self) -> str:
        return "(" + ", ".join(f"({e.lam},{e.m},{e.mu})" for e in self.entries) + ")"


def _chains(n: int) -> List[List[Tuple[IntPartition, int]]]:
    """Strictly increasing lambdas with multiplicities, sum m*|lambda| = n."""
    candidates = [p for k in range(1, n + 1) for p in partitions_of(k)]
    out: List[List[Tuple[IntPartition, int]]] = []

    def rec(start: int, rest: int, acc: List[Tuple[IntPartition, int]]) -> None:
        if rest == 0:
            out.append(list(acc))
            return
        for idx in range(start, len(candidates)):
            lam = candidates[idx]
            for m in range(1, rest // lam.size + 1):
                acc.append((lam, m))
                rec(idx + 1, rest - m * lam.size, acc)
                acc.pop()

    rec(0, n, [])
    return out


def _expand(chain: List[Tuple[IntPartition, int]]) -> List[SpechtLabel]:
    labels: List[List[LabelEntry]] = [[]]
    for lam, m in chain:
        labels = [acc + [LabelEntry(lam, m, mu)] for acc in labels for mu in partitions_of(m)]
    return [SpechtLabel(tuple(entries)) for entries in labels]


@lru_cache(maxsize=None)
def _enumerate_labels(n: int) -> Tuple[SpechtLabel, ...]:
    labels = [lab for chain in _chains(n) for lab in _expand(chain)]
    # within a fixed number of blocks, larger labels come first
    labels.sort(key=lambda lab: tuple(e.order_key for e in lab.entries), reverse=True)
    labels.sort(key=lambda lab: lab.num_blocks)
    return tuple(labels)


def enumerate_labels(n: int) -> List[SpechtLabel]:
    if n < 1:
        raise InvalidLabelError("labels need n >= 1")
    return list(_enumerate_labels(n))
