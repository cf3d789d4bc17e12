# app/services/specht/symmetrizers.py
"""Young symmetrizers in the group algebra and their Hecke analogues (Gyoja elements)."""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, Iterable, Optional

import numpy as np

from app.services.algebra import AlgebraElement, BasisKey, hecke_mul
from app.services.combinatorics import IntPartition, Permutation, SetPartition, all_permutations, tableau_data
from app.services.errors import ConstructionError
from app.services.exactmath import QU, CoefficientField, RatFunc

GroupElement = Dict[Permutation, Fraction]


# -------------------------------
# GROUP ALGEBRA
# -------------------------------
def group_add(a: GroupElement, b: GroupElement) -> GroupElement:
    out = dict(a)
    for w, c in b.items():
        s = out.get(w, 0) + c
        if s:
            out[w] = s
        else:
            out.pop(w, None)
    return out


def group_mul(a: GroupElement, b: GroupElement) -> GroupElement:
    out: GroupElement = {}
    for v, c in a.items():
        for w, d in b.items():
            k = v.compose(w)
            s = out.get(k, 0) + c * d
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def proportionality(x: Dict[Any, Any], y: Dict[Any, Any]) -> Optional[Any]:
    """The scalar c with x = c*y, or None when x is not a multiple of y (y nonzero)."""
    if not x:
        return 0
    key = next(iter(y))
    c = x.get(key, 0) / y[key]
    if x.keys() != y.keys():
        return None
    return c if all(x[k] == c * y[k] for k in y) else None


@dataclass(frozen=True)
class Symmetrizers:
    shape: IntPartition
    r: GroupElement
    c: GroupElement
    s: GroupElement
    scalar: Fraction


@lru_cache(maxsize=None)
def symmetrizers(lam: IntPartition) -> Symmetrizers:
    """r = sum over R(lam), c = signed sum over C(lam), s = c r, with s s = scalar * s checked."""
    data = tableau_data(lam)
    r = {w: Fraction(1) for w in data.row_stabilizer}
    c = {w: Fraction(w.sign()) for w in data.col_stabilizer}
    s = group_mul(c, r)
    scalar = proportionality(group_mul(s, s), s)
    if not scalar:
        raise ConstructionError(f"Young symmetrizer of {lam} is not a nonzero multiple of an idempotent")
    return Symmetrizers(lam, r, c, s, scalar)


# -------------------------------
# HECKE ANALOGUES
# -------------------------------
def _hecke(terms: Dict[Permutation, Any], n: int, field: CoefficientField) -> AlgebraElement:
    bottom = SetPartition.bottom(n)
    return AlgebraElement(n, {BasisKey(bottom, w): c for w, c in terms.items()}, field)


def iota(perms: Iterable[Permutation], n: int, field: CoefficientField = QU) -> AlgebraElement:
    """sum of T_w over w in X"""
    return _hecke({w: 1 for w in perms}, n, field)


def epsilon_sum(perms: Iterable[Permutation], n: int, field: CoefficientField = QU) -> AlgebraElement:
    """sum of (-u)^(-l(w)) T_w over w in X"""
    neg_inv = -field.u_inverse
    return _hecke({w: neg_inv ** w.length() for w in perms}, n, field)


@dataclass(frozen=True)
class GyojaElement:
    shape: IntPartition
    c: AlgebraElement
    r: AlgebraElement
    e: AlgebraElement


@lru_cache(maxsize=None)
def gyoja_element(lam: IntPartition, field: CoefficientField = QU) -> GyojaElement:
    """e = T_{w^-1} y_{lam'} T_w x_lam = c(u) r(u), computed in the Hecke quotient."""
    n = lam.size
    data = tableau_data(lam)
    x = iota(data.row_stabilizer, n, field)
    y_conj = epsilon_sum(tableau_data(lam.conjugate()).row_stabilizer, n, field)
    w = data.w_lambda
    c = hecke_mul(hecke_mul(_hecke({w.inverse(): 1}, n, field), y_conj), _hecke({w: 1}, n, field))
    e = hecke_mul(c, x)
    if not e:
        raise ConstructionError(f"Gyoja element of {lam} vanished")
    return GyojaElement(lam, c, x, e)


def random_hecke_element(n: int, rng: np.random.Generator, field: CoefficientField = QU) -> AlgebraElement:
    return _hecke({w: int(rng.integers(-5, 6)) for w in all_permutations(n)}, n, field)


def random_group_element(n: int, rng: np.random.Generator) -> GroupElement:
    return {w: Fraction(int(rng.integers(-5, 6))) for w in all_permutations(n) if rng.integers(0, 2)}


def gyoja_proportionality(lam: IntPartition, rng: np.random.Generator, samples: int = 100, field: CoefficientField = QU) -> Dict[str, Any]:
    """c(u) z r(u) is a multiple of c(u) r(u) for every z in the Hecke algebra."""
    g = gyoja_element(lam, field)
    target = g.e.terms
    failures = 0
    for _ in range(samples):
        z = random_hecke_element(lam.size, rng, field)
        value = hecke_mul(hecke_mul(g.c, z), g.r)
        if proportionality(value.terms, target) is None:
            failures += 1
    return {"shape": lam.to_json(), "samples": samples, "failures": failures, "pass": failures == 0}


def symmetric_proportionality(lam: IntPartition, rng: np.random.Generator, samples: int = 100) -> Dict[str, Any]:
    """c z r is a multiple of s = c r for every z in the group algebra."""
    sym = symmetrizers(lam)
    failures = 0
    for _ in range(samples):
        z = random_group_element(lam.size, rng)
        if proportionality(group_mul(group_mul(sym.c, z), sym.r), sym.s) is None:
            failures += 1
    return {"shape": lam.to_json(), "samples": samples, "failures": failures, "pass": failures == 0}


def iota_sn_absorbs(n: int, field: CoefficientField = QU) -> bool:
    """T_w iota(S_n) = u^l(w) iota(S_n) in the Hecke algebra."""
    perms = all_permutations(n)
    total = iota(perms, n, field)
    for w in perms:
        lhs = hecke_mul(_hecke({w: 1}, n, field), total)
        if lhs != total.scale(field.u ** w.length()):
            return False
    return True
