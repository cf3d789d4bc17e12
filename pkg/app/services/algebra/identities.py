# app/services/algebra/identities.py
"""Structural identities of the algebra, checked exhaustively or on random samples."""
from itertools import combinations
from typing import Any, Callable, Dict, Iterable, List, Tuple

import numpy as np

from app.services.algebra.element import AlgebraElement, basis_keys
from app.services.algebra.generators import E, T, T_perm, T_perm_inverse, Tinv, e_pair, e_set
from app.services.algebra.involutions import form, star
from app.services.algebra.product import mul, mul_all
from app.services.algebra.words import flip
from app.services.combinatorics import Permutation, SetPartition, all_permutations, sp_closure, sp_enumerate
from app.services.exactmath import QU, CoefficientField
from logging_config import logger


def _check(name: str, cases: Iterable[Tuple[str, Callable[[], bool]]]) -> Dict[str, Any]:
    count, failures = 0, []
    for label, case in cases:
        count += 1
        if not case():
            failures.append(label)
            logger.warning("identity %s fails at %s", name, label)
    return {"instances": count, "failures": failures, "pass": not failures}


def _pick(rng: np.random.Generator, items: List[Any]) -> Any:
    return items[int(rng.integers(len(items)))]


def set_reflection(n: int, field: CoefficientField = QU, rng=None, samples: int = 0) -> Dict[str, Any]:
    """T_w E_A T_w^-1 = E_{wA}"""
    perms, parts = all_permutations(n), sp_enumerate(n)
    pairs = [(w, a) for w in perms for a in parts]
    if samples:
        pairs = [(_pick(rng, perms), _pick(rng, parts)) for _ in range(samples)]
    return _check(
        "set_reflection",
        (
            (f"w={w} A={a}", lambda w=w, a=a: mul_all(T_perm(w, field), e_set(a, field), T_perm_inverse(w, field)) == e_set(a.apply(w), field))
            for w, a in pairs
        ),
    )


def inclusion(n: int, field: CoefficientField = QU) -> Dict[str, Any]:
    """E_A E_B = E_{A v B}"""
    parts = sp_enumerate(n)
    return _check(
        "inclusion",
        ((f"A={a} B={b}", lambda a=a, b=b: mul(e_set(a, field), e_set(b, field)) == e_set(a.join(b), field)) for a in parts for b in parts),
    )


def formulas(n: int, field: CoefficientField = QU) -> Dict[str, Any]:
    """(a) T_j E_i T_j^-1 = T_i^-1 E_j T_i, (b) T_i^-1 T_j E_i = E_j T_i^-1 T_j, (c) T_j E_i T_j^-1 = T_i E_j T_i^-1, |i-j| = 1"""
    near = [(i, j) for i in range(1, n) for j in range(1, n) if abs(i - j) == 1]

    def cases():
        for i, j in near:
            Ti, Tj, Ei, Ej = T(i, n, field), T(j, n, field), E(i, n, field), E(j, n, field)
            Tii, Tji = Tinv(i, n, field), Tinv(j, n, field)
            yield f"(a) i={i} j={j}", lambda: mul_all(Tj, Ei, Tji) == mul_all(Tii, Ej, Ti)
            yield f"(b) i={i} j={j}", lambda: mul_all(Tii, Tj, Ei) == mul_all(Ej, Tii, Tj)
            yield f"(c) i={i} j={j}", lambda: mul_all(Tj, Ei, Tji) == mul_all(Ti, Ej, Tii)

    return _check("formulas", cases())


def reflection(n: int, field: CoefficientField = QU) -> Dict[str, Any]:
    """T_i E_jk T_i^-1 = E_{s_i j, s_i k}"""

    def cases():
        for i in range(1, n):
            s = Permutation.simple(i, n)
            for j, k in combinations(range(1, n + 1), 2):
                a, b = sorted((s(j), s(k)))
                yield f"i={i} jk={j}{k}", lambda i=i, j=j, k=k, a=a, b=b: mul_all(
                    T(i, n, field), e_pair(j, k, n, field), Tinv(i, n, field)
                ) == e_pair(a, b, n, field)

    return _check("reflection", cases())


def extension(n: int, rng: np.random.Generator, samples: int = 100, field: CoefficientField = QU) -> Dict[str, Any]:
    """prod over (i, j) in R of E_ij = E_<R> for random relation sets R."""
    pairs = list(combinations(range(1, n + 1), 2))

    def cases():
        for _ in range(samples):
            size = int(rng.integers(0, len(pairs) + 1))
            chosen = [pairs[int(k)] for k in rng.choice(len(pairs), size=size, replace=False)] if size else []
            prod = AlgebraElement.identity(n, field)
            for i, j in chosen:
                prod = mul(prod, e_pair(i, j, n, field))
            yield f"R={chosen}", lambda prod=prod, chosen=chosen: prod == e_set(sp_closure(chosen, n), field)

    return _check("extension", cases())


def _reverse(part: SetPartition) -> SetPartition:
    n = part.n
    return SetPartition(n, tuple(tuple(n + 1 - x for x in b) for b in part.blocks))


def flip_laws(n: int, rng: np.random.Generator, samples: int = 50, field: CoefficientField = QU) -> Dict[str, Any]:
    """flip is an involutive automorphism and sends E_ij to E_{n+1-j, n+1-i}."""
    keys = basis_keys(n)

    def cases():
        for i, j in combinations(range(1, n + 1), 2):
            yield f"E{i}{j}", lambda i=i, j=j: flip(e_pair(i, j, n, field)) == e_pair(n + 1 - j, n + 1 - i, n, field)
        for a in sp_enumerate(n):
            yield f"E_A A={a}", lambda a=a: flip(e_set(a, field)) == e_set(_reverse(a), field)
        for _ in range(samples):
            x = AlgebraElement.basis(_pick(rng, keys), field)
            y = AlgebraElement.basis(_pick(rng, keys), field)
            yield "involution", lambda x=x: flip(flip(x)) == x
            yield "multiplicative", lambda x=x, y=y: flip(mul(x, y)) == mul(flip(x), flip(y))

    return _check("flip", cases())


def random_element(n: int, rng: np.random.Generator, field: CoefficientField = QU, terms: int = 2) -> AlgebraElement:
    keys = basis_keys(n)
    out = AlgebraElement.zero(n, field)
    for _ in range(terms):
        c = int(rng.integers(-3, 4)) or 1
        out = out + AlgebraElement.basis(_pick(rng, keys), field).scale(c)
    return out


def star_and_form(n: int, rng: np.random.Generator, samples: int = 200, field: CoefficientField = QU) -> Dict[str, Any]:
    """(xy)* = y*x*, x** = x and <xy, z> = <y, x*z>."""

    def cases():
        for k in range(samples):
            x, y, z = (random_element(n, rng, field, terms=1) for _ in range(3))
            yield f"star #{k}", lambda x=x, y=y: star(mul(x, y)) == mul(star(y), star(x)) and star(star(x)) == x
            yield f"form #{k}", lambda x=x, y=y, z=z: form(mul(x, y), z) == form(y, mul(star(x), z))

    return _check("star_form", cases())


def associativity(n: int, rng: np.random.Generator, samples: int = 200, field: CoefficientField = QU) -> Dict[str, Any]:
    keys = basis_keys(n)

    def cases():
        for k in range(samples):
            x, y, z = (AlgebraElement.basis(_pick(rng, keys), field) for _ in range(3))
            yield f"#{k}", lambda x=x, y=y, z=z: mul(mul(x, y), z) == mul(x, mul(y, z))

    return _check("associativity", cases())


def structural_report(n: int, seed: int, samples: int = 200, exhaustive: bool = True, field: CoefficientField = QU) -> Dict[str, Any]:
    rng = np.random.default_rng(seed)
    checks = {
        "set_reflection": set_reflection(n, field, rng, samples=0 if exhaustive else samples),
        "inclusion": inclusion(n, field),
        "formulas": formulas(n, field),
        "reflection": reflection(n, field),
        "extension": extension(n, rng, samples, field),
        "flip": flip_laws(n, rng, min(samples, 50), field),
        "associativity": associativity(n, rng, samples, field),
    }
    if n <= 3:
        checks["star_form"] = star_and_form(n, rng, samples, field)
    return {"n": n, "seed": seed, "checks": checks, "pass": all(c["pass"] for c in checks.values())}
