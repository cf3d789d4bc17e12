from fractions import Fraction

import numpy as np
import pytest

from app.services.errors import DivisionByZeroError, ExpressionSyntaxError, PoleError
from app.services.exactmath import QU, RatFunc, at, random_rational, rf_eval

u = RatFunc.u()


def test_canonical_form_cancels_common_factors():
    x = (u * u - 1) / (u - 1)
    assert x == u + 1
    assert x.den_coeffs == (Fraction(1),)


def test_denominator_is_monic():
    x = RatFunc.from_coeffs([0, 2], [0, 4])
    assert x == Fraction(1, 2)
    assert x.is_constant()
    assert x.constant_value() == Fraction(1, 2)


def test_field_operations():
    a = (u - 1) / u
    assert a + 1 / u == 1
    assert a * u == u - 1
    assert a.inverse() == u / (u - 1)
    assert u ** -2 == RatFunc.u_power(-2)
    assert 3 - u == -(u - 3)


def test_zero_and_inverse_of_zero():
    zero = RatFunc.constant(0)
    assert not zero
    with pytest.raises(DivisionByZeroError):
        zero.inverse()
    with pytest.raises(ZeroDivisionError):
        u / 0


def test_hash_agrees_with_equality():
    assert hash(RatFunc.constant(1)) == hash(1)
    assert hash(RatFunc.constant(Fraction(1, 2))) == hash(Fraction(1, 2))
    assert len({RatFunc.constant(1), 1}) == 1
    assert len({RatFunc.constant(0), 0, Fraction(0)}) == 1
    assert hash((u * u - 1) / (u + 1)) == hash(u - 1)
    assert len({u - 1, (u * u - 1) / (u + 1)}) == 1


def test_str():
    assert str(u - 1) == "u-1"
    assert str(RatFunc.constant(Fraction(-3, 2))) == "-3/2"
    assert str((u - 1) / u) == "(u-1)/u"
    assert str(1 / (u + 1)) == "(1)/(u+1)"
    assert str(2 * u**2 - u) == "2*u^2-u"


def test_parse_matches_construction():
    assert RatFunc.parse("(u-1)/u") == (u - 1) / u
    assert RatFunc.parse("u^-1 - 1") == 1 / u - 1
    assert RatFunc.parse("3/6") == Fraction(1, 2)


def test_parse_reports_syntax_errors():
    with pytest.raises(ExpressionSyntaxError):
        RatFunc.parse("u + ")


def test_evaluate_and_poles():
    x = (u + 1) / (u - 2)
    assert x.evaluate(3) == 4
    assert rf_eval(x, Fraction(1, 2)) == Fraction(-1)
    assert rf_eval(5, 7) == 5
    with pytest.raises(PoleError):
        x.evaluate(2)


def test_json_uses_rational_strings():
    x = (u - 1) / 2
    assert x.to_json() == {"num": ["-1/2", "1/2"], "den": ["1/1"]}
    assert RatFunc.from_json(x.to_json()) == x


def test_specialized_field():
    f = at(Fraction(2, 3))
    assert f.coerce((u + 1) / u) == Fraction(5, 2)
    assert f.u_minus_one == Fraction(-1, 3)
    assert at(Fraction(2, 3)) is f
    with pytest.raises(PoleError):
        at(0).u_inverse
    assert QU.u_inverse * u == 1


def test_random_rational_is_seeded():
    a = random_rational(np.random.default_rng(7), 1000)
    b = random_rational(np.random.default_rng(7), 1000)
    assert a == b
    assert 0 < a.denominator <= 1000 and abs(a.numerator) <= 1000


def _random_ratfunc(rng: np.random.Generator) -> RatFunc:
    num = [int(c) for c in rng.integers(-4, 5, size=3)]
    den = [int(c) for c in rng.integers(-4, 5, size=2)]
    if not any(den):
        den = [1]
    return RatFunc.from_coeffs(num, den)


def test_rf_eval_is_a_ring_homomorphism(rng):
    checked = 0
    while checked < 100:
        a, b = _random_ratfunc(rng), _random_ratfunc(rng)
        q = random_rational(rng, 50)
        try:
            fa, fb = rf_eval(a, q), rf_eval(b, q)
        except PoleError:
            continue
        assert rf_eval(a + b, q) == fa + fb
        assert rf_eval(a - b, q) == fa - fb
        assert rf_eval(a * b, q) == fa * fb
        assert rf_eval(RatFunc.constant(1), q) == 1
        checked += 1
