# app/services/algebra/words.py
"""Words in the generators T_i, T_i^-1, E_i."""
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

from app.services.algebra.element import AlgebraElement, BasisKey
from app.services.algebra.generators import KINDS, gen
from app.services.algebra.product import mul
from app.services.errors import EngineError, IndexRangeError
from app.services.exactmath import QU, CoefficientField


@dataclass(frozen=True)
class Letter:
    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise EngineError(f"unknown generator kind {self.kind!r}")

    def __str__(self) -> str:
        return f"{self.kind}({self.index})"


@dataclass(frozen=True)
class GeneratorWord:
    n: int
    letters: Tuple[Letter, ...]

    def __post_init__(self):
        for letter in self.letters:
            if not 1 <= letter.index <= self.n - 1:
                raise IndexRangeError(f"{letter} out of range for n={self.n}")

    @classmethod
    def of(cls, n: int, *letters: Tuple[str, int]) -> "GeneratorWord":
        return cls(n, tuple(Letter(k, i) for k, i in letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "GeneratorWord") -> "GeneratorWord":
        return GeneratorWord(self.n, self.letters + other.letters)

    def evaluate(self, field: CoefficientField = QU) -> AlgebraElement:
        acc = AlgebraElement.identity(self.n, field)
        for letter in self.letters:
            acc = mul(acc, gen(letter.kind, letter.index, self.n, field))
        return acc

    def flipped(self) -> "GeneratorWord":
        return GeneratorWord(self.n, tuple(Letter(l.kind, self.n - l.index) for l in self.letters))

    def to_json(self) -> List[List]:
        return [[l.kind, l.index] for l in self.letters]

    def __str__(self) -> str:
        return " ".join(map(str, self.letters)) or "1"


def pair_word(i: int, j: int, n: int) -> GeneratorWord:
    """T_i ... T_{j-2} E_{j-1} T_{j-2}^-1 ... T_i^-1"""
    letters = [Letter("T", k) for k in range(i, j - 1)]
    letters.append(Letter("E", j - 1))
    letters += [Letter("Tinv", k) for k in range(j - 2, i - 1, -1)]
    return GeneratorWord(n, tuple(letters))


@lru_cache(maxsize=None)
def word_expand(key: BasisKey) -> GeneratorWord:
    """A word evaluating to E_A T_w: the pair words of each block, then the reduced word of w."""
    n = key.n
    word = GeneratorWord(n, ())
    for block in key.partition.blocks:
        for i in block[1:]:
            word = word + pair_word(block[0], i, n)
    return word + GeneratorWord(n, tuple(Letter("T", i) for i in key.perm.reduced_word()))


def flip(x: AlgebraElement) -> AlgebraElement:
    """The automorphism T_i -> T_{n-i}, E_i -> E_{n-i}."""
    acc = AlgebraElement.zero(x.n, x.field)
    for key, c in x.terms.items():
        acc = acc + word_expand(key).flipped().evaluate(x.field).scale(c)
    return acc
