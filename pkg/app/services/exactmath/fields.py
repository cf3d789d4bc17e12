# app/services/exactmath/fields.py
"""Coefficient fields the engine computes over.

QU is the generic field Q(u). at(q) is Q with u specialized to the rational q;
its coefficients are plain Fractions, which keeps tensor and rank work at
larger n affordable.
"""
from fractions import Fraction
from functools import lru_cache
from typing import Any, Hashable, Union

from app.services.errors import PoleError
from app.services.exactmath.ratfunc import RatFunc


class CoefficientField:
    key: Hashable = None
    one: Any = None
    zero: Any = None
    u: Any = None

    def coerce(self, value: Any) -> Any:
        raise NotImplementedError

    def evaluate(self, value: Any, q: Union[int, Fraction]) -> Fraction:
        raise NotImplementedError

    @property
    def u_minus_one(self) -> Any:
        return self.u - self.one

    @property
    def u_inverse(self) -> Any:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.key}>"


class GenericField(CoefficientField):
    key = "Q(u)"

    def __init__(self):
        self.one = RatFunc.constant(1)
        self.zero = RatFunc.constant(0)
        self.u = RatFunc.u()
        self._u_minus_one = self.u - self.one
        self._u_inverse = RatFunc.u_power(-1)

    def coerce(self, value: Any) -> RatFunc:
        return RatFunc.coerce(value)

    def evaluate(self, value: Any, q: Union[int, Fraction]) -> Fraction:
        return RatFunc.coerce(value).evaluate(q)

    @property
    def u_minus_one(self) -> RatFunc:
        return self._u_minus_one

    @property
    def u_inverse(self) -> RatFunc:
        return self._u_inverse


class SpecializedField(CoefficientField):
    def __init__(self, q: Union[int, Fraction]):
        self.q = Fraction(q)
        self.key = ("at", self.q)
        self.one = Fraction(1)
        self.zero = Fraction(0)
        self.u = self.q

    def coerce(self, value: Any) -> Fraction:
        if isinstance(value, RatFunc):
            return value.evaluate(self.q)
        return Fraction(value)

    def evaluate(self, value: Any, q: Union[int, Fraction]) -> Fraction:
        return self.coerce(value)

    @property
    def u_inverse(self) -> Fraction:
        if self.q == 0:
            raise PoleError("u^-1 has a pole at u=0")
        return 1 / self.q


QU = GenericField()


@lru_cache(maxsize=64)
def at(q: Union[int, Fraction]) -> SpecializedField:
    return SpecializedField(q)
