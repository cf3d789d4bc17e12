# app/services/algebra/product.py
"""Multiplication in the basis E_A T_w.

(E_A T_w)(E_B T_v) = E_{A v wB} T_w T_v, and T_w T_v is expanded by
multiplying on the right by one letter of the reduced word of v at a time.
"""
from typing import Any, Dict

from app.config import settings
from app.services.algebra.element import AlgebraElement, BasisKey
from app.services.cache import MemoPool, MemoTable
from app.services.errors import check_same_n
from app.services.exactmath import QU, CoefficientField, at
from logging_config import logger

# one memo per coefficient field; u and u = 1 stay, other points rotate out
_structure_constants = MemoPool("structure-constants", settings.MEMO_SPECIALIZATIONS, pinned=(QU.key, at(1).key))


def _accumulate(out: Dict[BasisKey, Any], key: BasisKey, c: Any) -> None:
    if key in out:
        s = out[key] + c
        if s:
            out[key] = s
        else:
            del out[key]
    elif c:
        out[key] = c


def times_simple(terms: Dict[BasisKey, Any], i: int, field: CoefficientField) -> Dict[BasisKey, Any]:
    """Right-multiply a linear combination of basis elements by T_i."""
    out: Dict[BasisKey, Any] = {}
    um1 = field.u_minus_one
    for key, c in terms.items():
        x, part = key.perm, key.partition
        xs = x.times_simple(i)
        _accumulate(out, BasisKey(part, xs), c)
        if x(i) > x(i + 1) and um1:
            # descent: T_x T_i = T_{x s_i} T_i^2 and T_{x s_i} E_i = E_{x(i),x(i+1)} T_{x s_i},
            # the tie lands on the values x(i), x(i+1), not on the positions i, i+1
            joined = part.join_pair(x(i), x(i + 1))
            t = c * um1
            _accumulate(out, BasisKey(joined, xs), t)
            _accumulate(out, BasisKey(joined, x), t)
    return out


def _compute(k1: BasisKey, k2: BasisKey, field: CoefficientField) -> Dict[BasisKey, Any]:
    part = k1.partition.join(k2.partition.apply(k1.perm))
    terms: Dict[BasisKey, Any] = {BasisKey(part, k1.perm): field.one}
    for i in k2.perm.reduced_word():
        terms = times_simple(terms, i, field)
    return terms


def _product(table: MemoTable, k1: BasisKey, k2: BasisKey, field: CoefficientField) -> Dict[BasisKey, Any]:
    size = len(table)
    terms = table.get_or_compute((k1, k2), lambda: _compute(k1, k2, field))
    if size != len(table) and len(table) % 10000 == 0:
        logger.debug("structure constant memo over %s holds %d products", field.key, len(table))
    return terms


def basis_product(k1: BasisKey, k2: BasisKey, field: CoefficientField) -> Dict[BasisKey, Any]:
    check_same_n(k1.n, k2.n)
    return _product(_structure_constants.table(field.key), k1, k2, field)


def mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    x, y = x._aligned(y)
    field = x.field
    table = _structure_constants.table(field.key)
    out: Dict[BasisKey, Any] = {}
    for k1, c1 in x.terms.items():
        for k2, c2 in y.terms.items():
            c = c1 * c2
            for k, s in _product(table, k1, k2, field).items():
                _accumulate(out, k, c * s)
    return AlgebraElement(x.n, out, field)


def mul_all(*factors: AlgebraElement) -> AlgebraElement:
    acc = factors[0]
    for f in factors[1:]:
        acc = mul(acc, f)
    return acc


def structure_constant_count() -> int:
    return len(_structure_constants)


def clear_structure_constants() -> None:
    _structure_constants.clear()
