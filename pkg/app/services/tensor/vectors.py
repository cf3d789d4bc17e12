# app/services/tensor/vectors.py
"""Tensor space V^{(x)n} with basis v_{i1}^{j1} (x) ... (x) v_{in}^{jn} and the generator action.

A pure tensor is a tuple of (lower, upper) pairs. Operators are never
materialized; generators act on sparse vectors directly.
"""
from itertools import product
from typing import Any, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from app.services.algebra import AlgebraElement, GeneratorWord, Letter, word_expand
from app.services.combinatorics import Permutation, SetPartition
from app.services.errors import EngineError, IndexRangeError, check_same_n
from app.services.exactmath import QU, CoefficientField, RatFunc

TensorKey = Tuple[Tuple[int, int], ...]


def tensor_key(pairs: Iterable[Sequence[int]], n: int) -> TensorKey:
    key = tuple((int(i), int(j)) for i, j in pairs)
    if len(key) != n or any(not (1 <= i <= n and 1 <= j <= n) for i, j in key):
        raise IndexRangeError(f"{list(key)} is not a pure tensor of V^(x){n}")
    return key


def key_str(key: TensorKey) -> str:
    return "(x)".join(f"v{i}^{j}" for i, j in key)


class TensorVector:
    __slots__ = ("n", "terms", "field")

    def __init__(self, n: int, terms: Optional[Dict[TensorKey, Any]] = None, field: CoefficientField = QU):
        self.n = n
        self.field = field
        self.terms: Dict[TensorKey, Any] = {}
        for k, c in (terms or {}).items():
            c = field.coerce(c)
            if c:
                self.terms[k] = c

    @classmethod
    def pure(cls, pairs: Iterable[Sequence[int]], n: int, field: CoefficientField = QU) -> "TensorVector":
        return cls(n, {tensor_key(pairs, n): 1}, field)

    @classmethod
    def zero(cls, n: int, field: CoefficientField = QU) -> "TensorVector":
        return cls(n, {}, field)

    def _build(self, terms: Dict[TensorKey, Any]) -> "TensorVector":
        out = TensorVector.__new__(TensorVector)
        out.n, out.field = self.n, self.field
        out.terms = {k: c for k, c in terms.items() if c}
        return out

    def to_field(self, field: CoefficientField) -> "TensorVector":
        return TensorVector(self.n, {k: field.coerce(c) for k, c in self.terms.items()}, field)

    def __add__(self, other: "TensorVector") -> "TensorVector":
        check_same_n(self.n, other.n)
        if other.field.key != self.field.key:
            other = other.to_field(self.field)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms[k] + c if k in terms else c
        return self._build(terms)

    def __neg__(self) -> "TensorVector":
        return self._build({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "TensorVector") -> "TensorVector":
        return self + (-other)

    def scale(self, c: Any) -> "TensorVector":
        c = self.field.coerce(c)
        return self._build({k: c * v for k, v in self.terms.items()})

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, TensorVector):
            return NotImplemented
        if self.n != other.n or self.terms.keys() != other.terms.keys():
            return False
        return all(c == other.terms[k] for k, c in self.terms.items())

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def items(self) -> Iterator[Tuple[TensorKey, Any]]:
        for k in sorted(self.terms):
            yield k, self.terms[k]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{key_str(k)}" for k, c in self.items())

    def __repr__(self) -> str:
        return f"TensorVector(n={self.n}, {self})"

    def to_json(self) -> List[Dict[str, Any]]:
        return [{"key": [list(p) for p in k], "coeff": RatFunc.coerce(c).to_json()} for k, c in self.items()]


def _acc(out: Dict[TensorKey, Any], key: TensorKey, c: Any) -> None:
    if key in out:
        s = out[key] + c
        if s:
            out[key] = s
        else:
            del out[key]
    elif c:
        out[key] = c


def _swap(key: TensorKey, k: int) -> TensorKey:
    lst = list(key)
    lst[k - 1], lst[k] = lst[k], lst[k - 1]
    return tuple(lst)


def _check_position(k: int, n: int) -> None:
    if not 1 <= k <= n - 1:
        raise IndexRangeError(f"position {k} out of range 1..{n - 1}")


def act_T(k: int, v: TensorVector) -> TensorVector:
    """T at positions (k, k+1): a transposition unless the upper indices agree,
    where it is the Jimbo matrix."""
    _check_position(k, v.n)
    u, um1 = v.field.u, v.field.u_minus_one
    out: Dict[TensorKey, Any] = {}
    for key, c in v.terms.items():
        (i1, j1), (i2, j2) = key[k - 1], key[k]
        if j1 != j2 or i1 < i2:
            _acc(out, _swap(key, k), c)
        elif i1 == i2:
            _acc(out, key, u * c)
        else:
            _acc(out, _swap(key, k), u * c)
            _acc(out, key, um1 * c)
    return v._build(out)


def act_E(k: int, v: TensorVector) -> TensorVector:
    """E at positions (k, k+1): keeps a pure tensor iff the two upper indices agree."""
    _check_position(k, v.n)
    return v._build({key: c for key, c in v.terms.items() if key[k - 1][1] == key[k][1]})


def act_Tinv(k: int, v: TensorVector) -> TensorVector:
    """T^-1 = T + (u^-1 - 1) E (1 + T)"""
    c = v.field.u_inverse - v.field.one
    tv = act_T(k, v)
    return tv + act_E(k, v + tv).scale(c)


_LETTER_ACTIONS = {"T": act_T, "E": act_E, "Tinv": act_Tinv}


def act_letter(letter: Letter, v: TensorVector) -> TensorVector:
    return _LETTER_ACTIONS[letter.kind](letter.index, v)


def act_word(word: GeneratorWord, v: TensorVector) -> TensorVector:
    """The rightmost letter acts first."""
    check_same_n(word.n, v.n)
    for letter in reversed(word.letters):
        if not v:
            return v
        v = act_letter(letter, v)
    return v


def act(x: AlgebraElement, v: TensorVector) -> TensorVector:
    check_same_n(x.n, v.n)
    if x.field.key != v.field.key:
        if v.field is QU:
            v = v.to_field(x.field)
        elif x.field is QU:
            x = x.to_field(v.field)
        else:
            raise EngineError(f"cannot act over {x.field} on a vector over {v.field}")
    out = TensorVector.zero(v.n, v.field)
    for key, c in x.terms.items():
        out = out + act_word(word_expand(key), v).scale(c)
    return out


def relabel_upper(sigma: Permutation, v: TensorVector) -> TensorVector:
    check_same_n(sigma.n, v.n)
    return v._build({tuple((i, sigma(j)) for i, j in key): c for key, c in v.terms.items()})


def pure_tensors(n: int) -> List[TensorKey]:
    """All (n^2)^n pure tensors, sorted."""
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    return [tuple(p) for p in product(pairs, repeat=n)]


def witness_tensor(part: SetPartition) -> TensorKey:
    """Lower indices 1..n, upper index at p = number of the block containing p."""
    index = {x: b + 1 for b, block in enumerate(part.blocks) for x in block}
    return tuple((p, index[p]) for p in range(1, part.n + 1))


def uppers_constant_on_blocks(key: TensorKey, part: SetPartition) -> bool:
    return all(key[x - 1][1] == key[b[0] - 1][1] for b in part.blocks for x in b)
