# app/services/exactmath/ratfunc.py
"""Exact elements of Q(u).

Numerator and denominator are sympy PolyElements over QQ. The canonical form
has gcd(num, den) = 1 and a monic denominator, so equality and hashing work
on the stored representation.
"""
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Sequence, Tuple, Union

from sympy import QQ
from sympy.polys.rings import ring

from app.services.errors import DivisionByZeroError, EngineError, PoleError

_RING, _U = ring("u", QQ)

Scalar = Union[int, Fraction, "RatFunc"]


def _to_qq(c: Union[int, Fraction]):
    c = Fraction(c)
    return QQ(c.numerator, c.denominator)


def _to_fraction(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


def _poly(coeffs: Sequence[Union[int, Fraction]]):
    return _RING.from_dict({(d,): _to_qq(c) for d, c in enumerate(coeffs) if c})


def _coeffs(p) -> Tuple[Fraction, ...]:
    if not p:
        return ()
    out = [Fraction(0)] * (p.degree() + 1)
    for (d,), c in p.items():
        out[d] = _to_fraction(c)
    return tuple(out)


def _canonical(num, den):
    if not den:
        raise DivisionByZeroError("division by zero in Q(u)")
    if not num:
        return _RING.zero, _RING.one
    if not den.is_ground:
        num, den = num.cancel(den)
    lc = den.LC
    if lc != QQ.one:
        num = num.quo_ground(lc)
        den = den.quo_ground(lc)
    return num, den


def _format_fraction(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _poly_str(coeffs: Sequence[Fraction]) -> str:
    parts: List[str] = []
    for d in range(len(coeffs) - 1, -1, -1):
        c = coeffs[d]
        if not c:
            continue
        mag = abs(c)
        if d == 0:
            body = _format_fraction(mag)
        else:
            var = "u" if d == 1 else f"u^{d}"
            body = var if mag == 1 else f"{_format_fraction(mag)}*{var}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("-" if c < 0 else "+") + body)
    return "".join(parts) or "0"


class RatFunc:
    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=None, den=None, canonical: bool = False):
        num = _RING.zero if num is None else num
        den = _RING.one if den is None else den
        if not canonical:
            num, den = _canonical(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # -------------------------------
    # CONSTRUCTION
    # -------------------------------
    @classmethod
    def from_coeffs(cls, num: Sequence[Union[int, Fraction]], den: Sequence[Union[int, Fraction]] = (1,)) -> "RatFunc":
        return cls(_poly(num), _poly(den))

    @classmethod
    def constant(cls, c: Union[int, Fraction]) -> "RatFunc":
        return cls(_RING.ground_new(_to_qq(c)), _RING.one, canonical=True)

    @classmethod
    def u(cls) -> "RatFunc":
        return cls(_U, _RING.one, canonical=True)

    @classmethod
    def u_power(cls, k: int) -> "RatFunc":
        if k >= 0:
            return cls(_U**k, _RING.one, canonical=True)
        return cls(_RING.one, _U ** (-k), canonical=True)

    @classmethod
    def coerce(cls, value: Any) -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.constant(value)
        raise EngineError(f"cannot interpret {value!r} as an element of Q(u)")

    @classmethod
    def parse(cls, text: str) -> "RatFunc":
        from app.services.algebra.parser import parse_scalar

        return parse_scalar(text)

    # -------------------------------
    # FIELD OPERATIONS
    # -------------------------------
    def _is_poly(self) -> bool:
        return self.den == _RING.one

    def __add__(self, other: Scalar) -> "RatFunc":
        try:
            other = RatFunc.coerce(other)
        except EngineError:
            return NotImplemented
        if self._is_poly() and other._is_poly():
            return RatFunc(self.num + other.num, _RING.one, canonical=True)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, canonical=True)

    def __sub__(self, other: Scalar) -> "RatFunc":
        try:
            other = RatFunc.coerce(other)
        except EngineError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "RatFunc":
        return RatFunc.coerce(other) - self

    def __mul__(self, other: Scalar) -> "RatFunc":
        try:
            other = RatFunc.coerce(other)
        except EngineError:
            return NotImplemented
        if self._is_poly() and other._is_poly():
            return RatFunc(self.num * other.num, _RING.one, canonical=True)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise DivisionByZeroError("inverse of zero in Q(u)")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other: Scalar) -> "RatFunc":
        try:
            other = RatFunc.coerce(other)
        except EngineError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Scalar) -> "RatFunc":
        return RatFunc.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "RatFunc":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc(self.num**k, self.den**k, canonical=True)

    # -------------------------------
    # COMPARISON / INSPECTION
    # -------------------------------
    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, RatFunc):
            if isinstance(other, (int, Fraction)):
                other = RatFunc.constant(other)
            else:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            # constants hash like the Fraction they equal
            self._hash = hash(self.constant_value()) if self.is_constant() else hash((self.num_coeffs, self.den_coeffs))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.num)

    @property
    def num_coeffs(self) -> Tuple[Fraction, ...]:
        return _coeffs(self.num)

    @property
    def den_coeffs(self) -> Tuple[Fraction, ...]:
        return _coeffs(self.den)

    def is_constant(self) -> bool:
        return self.num.is_ground and self._is_poly()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise EngineError(f"{self} is not constant in u")
        return _to_fraction(self.num.LC) if self.num else Fraction(0)

    def evaluate(self, q: Union[int, Fraction]) -> Fraction:
        q = Fraction(q)
        den = _horner(self.den_coeffs, q)
        if den == 0:
            raise PoleError(f"{self} has a pole at u={q}")
        return _horner(self.num_coeffs, q) / den

    # -------------------------------
    # SERIALIZATION
    # -------------------------------
    def __str__(self) -> str:
        num = _poly_str(self.num_coeffs)
        if self._is_poly():
            return num
        den = _poly_str(self.den_coeffs)
        if len(self.den.terms()) > 1:
            den = f"({den})"
        return f"({num})/{den}"

    def __repr__(self) -> str:
        return f"RatFunc({self})"

    def to_json(self) -> Dict[str, List[str]]:
        def fmt(cs: Iterable[Fraction]) -> List[str]:
            return [f"{c.numerator}/{c.denominator}" for c in cs]

        return {"num": fmt(self.num_coeffs) or ["0/1"], "den": fmt(self.den_coeffs)}

    @classmethod
    def from_json(cls, data: Dict[str, List[str]]) -> "RatFunc":
        return cls.from_coeffs([Fraction(c) for c in data["num"]], [Fraction(c) for c in data["den"]])


def _horner(coeffs: Sequence[Fraction], q: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * q + c
    return acc


def rf_eval(a: Union[RatFunc, int, Fraction], q: Union[int, Fraction]) -> Fraction:
    if isinstance(a, RatFunc):
        return a.evaluate(q)
    return Fraction(a)


def random_rational(rng, bound: int) -> Fraction:
    """Random rational p/q with |p| <= bound and 1 <= q <= bound, drawn from a numpy Generator."""
    p = int(rng.integers(-bound, bound + 1))
    q = int(rng.integers(1, bound + 1))
    return Fraction(p, q)
