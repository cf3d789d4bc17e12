# app/services/combinatorics/permutations.py
"""Permutations of {1..n} in one-line notation.

Composition is (v*w)(i) = v(w(i)); x * s_i swaps the images at positions i, i+1.
"""
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations as _itertools_permutations
from typing import Iterator, List, Sequence, Tuple

from app.services.errors import IndexRangeError, check_same_n


@dataclass(frozen=True)
class Permutation:
    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise IndexRangeError(f"{list(images)} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, i: int, n: int) -> "Permutation":
        if not 1 <= i < n:
            raise IndexRangeError(f"s_{i} out of range for n={n}")
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(tuple(images))

    @classmethod
    def from_word(cls, word: Sequence[int], n: int) -> "Permutation":
        w = cls.identity(n)
        for i in word:
            w = w.times_simple(i)
        return w

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        check_same_n(self.n, other.n)
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    __mul__ = compose

    def times_simple(self, i: int) -> "Permutation":
        if not 1 <= i < self.n:
            raise IndexRangeError(f"s_{i} out of range for n={self.n}")
        images = list(self.images)
        images[i - 1], images[i] = images[i], images[i - 1]
        return Permutation(tuple(images))

    @cached_property
    def _inverse(self) -> "Permutation":
        inv = [0] * self.n
        for pos, img in enumerate(self.images, start=1):
            inv[img - 1] = pos
        return Permutation(tuple(inv))

    def inverse(self) -> "Permutation":
        return self._inverse

    @cached_property
    def _length(self) -> int:
        im = self.images
        return sum(1 for a in range(len(im)) for b in range(a + 1, len(im)) if im[a] > im[b])

    def length(self) -> int:
        return self._length

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    @cached_property
    def _reduced_word(self) -> Tuple[int, ...]:
        # peel off the smallest left descent each time: lexicographically smallest reduced word
        word: List[int] = []
        w = self
        while not w.is_identity():
            inv = w.inverse()
            i = next(k for k in range(1, w.n) if inv(k) > inv(k + 1))
            word.append(i)
            w = Permutation.simple(i, w.n).compose(w)
        return tuple(word)

    def reduced_word(self) -> Tuple[int, ...]:
        return self._reduced_word

    def sign(self) -> int:
        return -1 if self.length() % 2 else 1

    @property
    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (self.length(), self.images)

    def __lt__(self, other: "Permutation") -> bool:
        return self.sort_key < other.sort_key

    def to_json(self) -> List[int]:
        return list(self.images)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.images)) + "]"


def all_permutations(n: int) -> List[Permutation]:
    """S_n sorted by (length, images)."""
    return sorted(Permutation(p) for p in _itertools_permutations(range(1, n + 1)))


def permutations_of(points: Sequence[int], n: int) -> Iterator[Permutation]:
    """All permutations of {1..n} that move only the given points."""
    points = list(points)
    for perm in _itertools_permutations(points):
        images = list(range(1, n + 1))
        for src, dst in zip(points, perm):
            images[src - 1] = dst
        yield Permutation(tuple(images))
