# app/services/specht/tensor_form.py
"""Bilinear form on tensor space: diagonal on pure tensors with weight u^e.

e is summed over the groups of positions sharing an upper index: within
each group, the number of inversions of the sequence of lower indices.
"""
from itertools import combinations
from typing import Any, Dict, List, Optional

import numpy as np

from app.config import settings
from app.services.algebra import AlgebraElement, E, T, star
from app.services.combinatorics import SpechtLabel
from app.services.errors import check_same_n
from app.services.exactmath import QU, CoefficientField
from app.services.specht.construction import specht_seed
from app.services.tensor import TensorKey, TensorVector, act, pure_tensors


def weight_exponent(key: TensorKey) -> int:
    groups: Dict[int, List[int]] = {}
    for low, up in key:
        groups.setdefault(up, []).append(low)
    return sum(1 for lows in groups.values() for a, b in combinations(lows, 2) if a > b)


def tensor_form(v: TensorVector, w: TensorVector) -> Any:
    check_same_n(v.n, w.n)
    field = v.field
    if w.field.key != field.key:
        w = w.to_field(field)
    total = field.zero
    small, large = (v, w) if len(v.terms) <= len(w.terms) else (w, v)
    for key, c in small.terms.items():
        d = large.terms.get(key)
        if d:
            total = total + c * d * field.u ** weight_exponent(key)
    return total


def form_invariance(n: int, seed: Optional[int] = None, samples: int = 200, field: CoefficientField = QU) -> Dict[str, Any]:
    """<x v, w> = <v, x* w> for generators x and pure tensors v, w sharing lower/upper content."""
    rng = np.random.default_rng(settings.DEFAULT_SEED if seed is None else seed)
    keys = pure_tensors(n)
    gens: List[AlgebraElement] = [T(k, n, field) for k in range(1, n)] + [E(k, n, field) for k in range(1, n)]
    failures = []
    for _ in range(samples):
        x = gens[int(rng.integers(len(gens)))]
        v_key = keys[int(rng.integers(len(keys)))]
        # w is v with its factors permuted, otherwise both sides vanish
        perm = rng.permutation(n)
        w_key = tuple(v_key[int(p)] for p in perm)
        v = TensorVector(n, {v_key: 1}, field)
        w = TensorVector(n, {w_key: 1}, field)
        if tensor_form(act(x, v), w) != tensor_form(v, act(star(x), w)):
            failures.append({"x": str(x), "v": str(v), "w": str(w)})
    return {"n": n, "samples": samples, "failures": failures[:20], "pass": not failures}


def seed_norms(labels: List[SpechtLabel], field: CoefficientField = QU) -> List[Dict[str, Any]]:
    """<e_L w_L, e_L w_L> for each label; the simplicity argument needs these nonzero."""
    out = []
    for label in labels:
        seed = specht_seed(label, field)
        value = tensor_form(seed, seed)
        out.append({"label": label.to_json(), "norm": str(value), "nonzero": bool(value)})
    return out
