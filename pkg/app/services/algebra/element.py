# app/services/algebra/element.py
"""Elements of the braids-and-ties algebra in the normal form sum c * E_A T_w."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Optional, Tuple

from app.services.combinatorics import Permutation, SetPartition, all_permutations, sp_enumerate
from app.services.errors import EngineError, SizeMismatchError, check_same_n
from app.services.exactmath import QU, CoefficientField, RatFunc, at


@dataclass(frozen=True)
class BasisKey:
    partition: SetPartition
    perm: Permutation

    def __post_init__(self):
        check_same_n(self.partition.n, self.perm.n)

    @classmethod
    def of(cls, blocks, images) -> "BasisKey":
        perm = Permutation(tuple(images))
        return cls(SetPartition.from_blocks(blocks, perm.n), perm)

    @property
    def n(self) -> int:
        return self.perm.n

    @property
    def sort_key(self) -> Tuple[Any, ...]:
        return (self.partition.sort_key, self.perm.sort_key)

    def __lt__(self, other: "BasisKey") -> bool:
        return self.sort_key < other.sort_key

    def monomial_str(self) -> str:
        factors = ["E{" + ",".join(map(str, b)) + "}" for b in self.partition.nontrivial_blocks()]
        factors += [f"T{i}" for i in self.perm.reduced_word()]
        return "*".join(factors) or "1"

    def to_json(self) -> Dict[str, Any]:
        return {"partition": self.partition.to_json(), "perm": self.perm.to_json()}


def basis_keys(n: int) -> List[BasisKey]:
    """All n! * B_n keys, canonical order."""
    return [BasisKey(a, w) for a in sp_enumerate(n) for w in all_permutations(n)]


def coeff_to_json(c: Any) -> Dict[str, List[str]]:
    return RatFunc.coerce(c).to_json()


def _coeff_is_constant(c: Any) -> bool:
    return not isinstance(c, RatFunc) or c.is_constant()


def _constant_str(c: Any) -> str:
    c = c.constant_value() if isinstance(c, RatFunc) else Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class AlgebraElement:
    __slots__ = ("n", "terms", "field")

    def __init__(self, n: int, terms: Optional[Dict[BasisKey, Any]] = None, field: CoefficientField = QU):
        self.n = n
        self.field = field
        self.terms: Dict[BasisKey, Any] = {}
        for k, c in (terms or {}).items():
            if k.n != n:
                raise SizeMismatchError(f"key of size {k.n} in an element of size {n}")
            c = field.coerce(c)
            if c:
                self.terms[k] = c

    # -------------------------------
    # CONSTRUCTION
    # -------------------------------
    @classmethod
    def zero(cls, n: int, field: CoefficientField = QU) -> "AlgebraElement":
        return cls(n, {}, field)

    @classmethod
    def scalar(cls, c: Any, n: int, field: CoefficientField = QU) -> "AlgebraElement":
        key = BasisKey(SetPartition.bottom(n), Permutation.identity(n))
        return cls(n, {key: c}, field)

    @classmethod
    def identity(cls, n: int, field: CoefficientField = QU) -> "AlgebraElement":
        return cls.scalar(1, n, field)

    @classmethod
    def basis(cls, key: BasisKey, field: CoefficientField = QU) -> "AlgebraElement":
        return cls(key.n, {key: 1}, field)

    def _build(self, terms: Dict[BasisKey, Any]) -> "AlgebraElement":
        out = AlgebraElement.__new__(AlgebraElement)
        out.n = self.n
        out.field = self.field
        out.terms = {k: c for k, c in terms.items() if c}
        return out

    def _aligned(self, other: "AlgebraElement") -> Tuple["AlgebraElement", "AlgebraElement"]:
        check_same_n(self.n, other.n)
        if self.field.key == other.field.key:
            return self, other
        if self.field is QU:
            return self.to_field(other.field), other
        if other.field is QU:
            return self, other.to_field(self.field)
        raise EngineError(f"cannot combine elements over {self.field} and {other.field}")

    def to_field(self, field: CoefficientField) -> "AlgebraElement":
        return AlgebraElement(self.n, {k: field.coerce(c) for k, c in self.terms.items()}, field)

    # -------------------------------
    # LINEAR STRUCTURE
    # -------------------------------
    def __add__(self, other: Any) -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            other = AlgebraElement.scalar(other, self.n, self.field)
        a, b = self._aligned(other)
        terms = dict(a.terms)
        for k, c in b.terms.items():
            terms[k] = terms[k] + c if k in terms else c
        return a._build(terms)

    __radd__ = __add__

    def __neg__(self) -> "AlgebraElement":
        return self._build({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: Any) -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            other = AlgebraElement.scalar(other, self.n, self.field)
        return self + (-other)

    def __rsub__(self, other: Any) -> "AlgebraElement":
        return (-self) + other

    def scale(self, c: Any) -> "AlgebraElement":
        c = self.field.coerce(c)
        if not c:
            return AlgebraElement.zero(self.n, self.field)
        return self._build({k: c * v for k, v in self.terms.items()})

    def __mul__(self, other: Any) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            from app.services.algebra.product import mul

            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other: Any) -> "AlgebraElement":
        return self.scale(other)

    # -------------------------------
    # INSPECTION
    # -------------------------------
    def __eq__(self, other: Any) -> bool:
        if isinstance(other, (int, Fraction, RatFunc)):
            other = AlgebraElement.scalar(other, self.n, self.field)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if self.n != other.n or self.terms.keys() != other.terms.keys():
            return False
        return all(c == other.terms[k] for k, c in self.terms.items())

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, key: BasisKey) -> Any:
        return self.terms.get(key, self.field.zero)

    def items(self) -> Iterator[Tuple[BasisKey, Any]]:
        for k in sorted(self.terms):
            yield k, self.terms[k]

    def specialize(self, q) -> "AlgebraElement":
        return self.to_field(at(q))

    # -------------------------------
    # SERIALIZATION
    # -------------------------------
    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for k, c in self.items():
            mono = k.monomial_str()
            if _coeff_is_constant(c):
                s = _constant_str(c)
                negative = s.startswith("-")
                mag = s.lstrip("-")
                body = mono if mag == "1" and mono != "1" else (mag if mono == "1" else f"{mag}*{mono}")
                if not out:
                    out = ("-" if negative else "") + body
                else:
                    out += (" - " if negative else " + ") + body
            else:
                body = f"({c})" if mono == "1" else f"({c})*{mono}"
                out = body if not out else out + " + " + body
        return out

    def __repr__(self) -> str:
        return f"AlgebraElement(n={self.n}, {self})"

    def to_json(self) -> List[Dict[str, Any]]:
        return [dict(k.to_json(), coeff=coeff_to_json(c)) for k, c in self.items()]
