# app/services/algebra/generators.py
from functools import lru_cache

from app.services.algebra.element import AlgebraElement, BasisKey
from app.services.algebra.product import mul
from app.services.combinatorics import Permutation, SetPartition, sp_closure
from app.services.errors import ConstructionError, EngineError, IndexRangeError
from app.services.exactmath import QU, CoefficientField

KINDS = ("T", "Tinv", "E")


def _check_index(i: int, n: int) -> None:
    if not 1 <= i <= n - 1:
        raise IndexRangeError(f"generator index {i} out of range 1..{n - 1}")


@lru_cache(maxsize=None)
def gen(kind: str, i: int, n: int, field: CoefficientField = QU) -> AlgebraElement:
    """T_i, E_i, or T_i^-1 = T_i + (u^-1 - 1) E_i (1 + T_i)."""
    _check_index(i, n)
    e = Permutation.identity(n)
    s = Permutation.simple(i, n)
    bottom = SetPartition.bottom(n)
    tie = sp_closure([(i, i + 1)], n)
    if kind == "T":
        return AlgebraElement(n, {BasisKey(bottom, s): 1}, field)
    if kind == "E":
        return AlgebraElement(n, {BasisKey(tie, e): 1}, field)
    if kind == "Tinv":
        c = field.u_inverse - field.one
        return AlgebraElement(n, {BasisKey(bottom, s): 1, BasisKey(tie, e): c, BasisKey(tie, s): c}, field)
    raise EngineError(f"unknown generator kind {kind!r}")


def T(i: int, n: int, field: CoefficientField = QU) -> AlgebraElement:
    return gen("T", i, n, field)


def Tinv(i: int, n: int, field: CoefficientField = QU) -> AlgebraElement:
    return gen("Tinv", i, n, field)


def E(i: int, n: int, field: CoefficientField = QU) -> AlgebraElement:
    return gen("E", i, n, field)


def T_perm(w: Permutation, field: CoefficientField = QU) -> AlgebraElement:
    return AlgebraElement(w.n, {BasisKey(SetPartition.bottom(w.n), w): 1}, field)


def T_perm_inverse(w: Permutation, field: CoefficientField = QU) -> AlgebraElement:
    """T_w^-1 as the product of T_i^-1 over the reduced word of w, read backwards."""
    acc = AlgebraElement.identity(w.n, field)
    for i in reversed(w.reduced_word()):
        acc = mul(acc, Tinv(i, w.n, field))
    return acc


@lru_cache(maxsize=None)
def e_pair(i: int, j: int, n: int, field: CoefficientField = QU) -> AlgebraElement:
    """E_ij = T_i ... T_{j-2} E_{j-1} T_{j-2}^-1 ... T_i^-1."""
    if not 1 <= i < j <= n:
        raise IndexRangeError(f"E_{{{i},{j}}} needs 1 <= i < j <= {n}")
    acc = AlgebraElement.identity(n, field)
    for k in range(i, j - 1):
        acc = mul(acc, T(k, n, field))
    acc = mul(acc, E(j - 1, n, field))
    for k in range(j - 2, i - 1, -1):
        acc = mul(acc, Tinv(k, n, field))
    expected = BasisKey(sp_closure([(i, j)], n), Permutation.identity(n))
    if acc != AlgebraElement.basis(expected, field):
        raise ConstructionError(f"E_{{{i},{j}}} did not reduce to a single basis element: {acc}")
    return acc


@lru_cache(maxsize=None)
def e_set(part: SetPartition, field: CoefficientField = QU) -> AlgebraElement:
    """E_A as the product over blocks I of E_{min I, i} for i in I."""
    n = part.n
    acc = AlgebraElement.identity(n, field)
    for block in part.blocks:
        for i in block[1:]:
            acc = mul(acc, e_pair(block[0], i, n, field))
    expected = BasisKey(part, Permutation.identity(n))
    if acc != AlgebraElement.basis(expected, field):
        raise ConstructionError(f"E_A for {part} did not reduce to a single basis element: {acc}")
    return acc
