# app/services/algebra/hecke.py
"""Quotients by the ideals J = (E_i - 1) and I = (E_i).

The first is the Hecke algebra H_n(u), the second the group algebra of S_n.
Both maps are algebra homomorphisms, so products can be formed upstairs and projected.
"""
from typing import Any, Dict

from app.services.algebra.element import AlgebraElement, BasisKey
from app.services.algebra.product import mul
from app.services.combinatorics import SetPartition


def hecke_project(x: AlgebraElement) -> AlgebraElement:
    """E_A T_w -> T_w, summing coefficients over A."""
    bottom = SetPartition.bottom(x.n)
    terms: Dict[BasisKey, Any] = {}
    for key, c in x.terms.items():
        k = BasisKey(bottom, key.perm)
        terms[k] = terms[k] + c if k in terms else c
    return AlgebraElement(x.n, terms, x.field)


def hecke_mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return hecke_project(mul(x, y))


def in_hecke_span(x: AlgebraElement) -> bool:
    return all(key.partition.is_bottom() for key in x.terms)


def group_project(x: AlgebraElement) -> AlgebraElement:
    """E_A T_w -> 0 unless A is the bottom partition; the image lives in the group algebra."""
    return AlgebraElement(x.n, {k: c for k, c in x.terms.items() if k.partition.is_bottom()}, x.field)
