# app/services/tensor/checks.py
"""Reports on the tensor representation: relations as operators, faithfulness, the quotients M and N."""
from itertools import product
from math import factorial
from typing import Any, Dict, List, Optional

import numpy as np
from joblib import Parallel, delayed

from app.config import settings
from app.services.algebra import AlgebraElement, BasisKey, basis_keys, e_set, mul
from app.services.algebra.relations import RelationInstance, check_instances, relation_instances
from app.services.combinatorics import Permutation, all_permutations, bell_number, sp_enumerate
from app.services.exactmath import QU, CoefficientField, Echelon, SparseMatrix, at, matrix_rank, policy_rank, random_fields
from app.services.tensor.vectors import (
    TensorKey,
    TensorVector,
    act,
    act_E,
    act_T,
    act_word,
    witness_tensor,
    pure_tensors,
    uppers_constant_on_blocks,
)
from logging_config import logger


def _sample_keys(n: int, rng: np.random.Generator, size: int) -> List[TensorKey]:
    keys = []
    for _ in range(size):
        flat = rng.integers(1, n + 1, size=2 * n)
        keys.append(tuple((int(flat[2 * p]), int(flat[2 * p + 1])) for p in range(n)))
    return keys


def _side_on(side, v: TensorVector) -> TensorVector:
    acc = TensorVector.zero(v.n, v.field)
    for c, word in side:
        acc = acc + act_word(word, v).scale(c)
    return acc


# -------------------------------
# RELATIONS AS OPERATORS
# -------------------------------
def verify_tensor_relations(n: int, seed: Optional[int] = None, points: int = 3, sample: Optional[int] = None) -> Dict[str, Any]:
    """(E1)-(E9) as operator identities on V^(x)n.

    Exact over Q(u) on every pure tensor for n <= 3; otherwise on a seeded
    sample of pure tensors at `points` random rational values of u.
    """
    seed = settings.DEFAULT_SEED if seed is None else seed
    instances = relation_instances(n)
    if n <= 3:
        fields: List[CoefficientField] = [QU]
        vectors = pure_tensors(n)
    else:
        rng = np.random.default_rng(seed)
        fields = random_fields(rng, points, settings.RANDOM_NUMERATOR_BOUND)
        vectors = _sample_keys(n, rng, sample or settings.TENSOR_SAMPLE)

    def holds_in(field: CoefficientField):
        def holds(inst: RelationInstance) -> bool:
            for key in vectors:
                v = TensorVector(n, {key: 1}, field)
                values = [_side_on(side, v) for side in inst.sides]
                if any(w != values[0] for w in values[1:]):
                    return False
            return True

        return holds

    runs = [check_instances(instances, holds_in(f), f"tensor n={n} over {f.key}") for f in fields]
    return {
        "n": n,
        "mode": "exact" if n <= 3 else "specialized",
        "fields": [str(f.key) for f in fields],
        "vectors": len(vectors),
        "runs": runs,
        "pass": all(r["pass"] for r in runs),
    }


def module_axiom(n: int, seed: Optional[int] = None, samples: int = 50) -> Dict[str, Any]:
    """act(xy, v) = act(x, act(y, v)) on random basis elements and pure tensors."""
    seed = settings.DEFAULT_SEED if seed is None else seed
    rng = np.random.default_rng(seed)
    keys = basis_keys(n)
    failures = []
    for key in _sample_keys(n, rng, samples):
        x = AlgebraElement.basis(keys[int(rng.integers(len(keys)))])
        y = AlgebraElement.basis(keys[int(rng.integers(len(keys)))])
        v = TensorVector(n, {key: 1})
        if act(mul(x, y), v) != act(x, act(y, v)):
            failures.append({"x": str(x), "y": str(y), "v": str(v)})
    return {"n": n, "samples": samples, "failures": failures, "pass": not failures}


def projection_law(n: int) -> Dict[str, Any]:
    """At u = 1, E_A acts on pure tensors as the indicator of uppers constant on the blocks of A."""
    field = at(1)
    failures = []
    for part in sp_enumerate(n):
        ea = e_set(part, field)
        for key in pure_tensors(n):
            v = TensorVector(n, {key: 1}, field)
            expected = v if uppers_constant_on_blocks(key, part) else TensorVector.zero(n, field)
            if act(ea, v) != expected:
                failures.append({"partition": part.to_json(), "key": [list(p) for p in key]})
    return {"n": n, "failures": failures[:20], "pass": not failures}


# -------------------------------
# FAITHFULNESS
# -------------------------------
def default_test_vectors(n: int) -> List[TensorKey]:
    if n <= 3:
        return pure_tensors(n)
    return [witness_tensor(a) for a in sp_enumerate(n)]


def _action_row(key: BasisKey, vectors: List[TensorKey], field: CoefficientField) -> Dict[Any, Any]:
    g = AlgebraElement.basis(key, field)
    row: Dict[Any, Any] = {}
    for p, vector in enumerate(vectors):
        for tk, c in act(g, TensorVector(g.n, {vector: 1}, field)).terms.items():
            row[(p, tk)] = c
    return row


def action_matrix(n: int, vectors: List[TensorKey], field: CoefficientField) -> SparseMatrix:
    keys = basis_keys(n)
    rows = Parallel(n_jobs=settings.PARALLEL_JOBS, prefer="threads")(delayed(_action_row)(k, vectors, field) for k in keys)
    return SparseMatrix.from_rows(rows)


def faithfulness_certificate(n: int, points: Optional[int] = None, seed: Optional[int] = None, exact: bool = False) -> Dict[str, Any]:
    """Rank of the action of the basis on test vectors; full rank n! B_n certifies faithfulness.

    The u = 1 witness comes first; random rational points follow as confirmation.
    A full rank at any single point is already a certificate, since a
    specialization never raises the rank.
    """
    seed = settings.DEFAULT_SEED if seed is None else seed
    points = settings.RANK_POINTS if points is None else points
    expected = factorial(n) * bell_number(n)
    vectors = default_test_vectors(n)
    result = policy_rank(
        lambda field: matrix_rank(action_matrix(n, vectors, field), field),
        np.random.default_rng(seed),
        points=points,
        bound=settings.RANDOM_NUMERATOR_BOUND,
        exact=exact,
        anchors=(1,),
    )
    if exact:
        witnesses = [{"at": "u", "rank": result["rank"]}]
    else:
        witnesses = [{"at": q, "rank": r} for q, r in zip(result["points"], result["ranks"])]
    best = result["rank"]
    logger.info("faithfulness n=%d: rank %d of %d over %d vectors", n, best, expected, len(vectors))
    return {
        "n": n,
        "rank": best,
        "expected": expected,
        "pass": best == expected,
        "vectors": len(vectors),
        "witnesses": witnesses,
    }


# -------------------------------
# QUOTIENTS M AND N
# -------------------------------
def _span_rank(vectors: List[TensorVector]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.insert(v.terms)
    return len(ech)


def _t_word_action(w: Permutation, v: TensorVector) -> TensorVector:
    for i in reversed(w.reduced_word()):
        v = act_T(i, v)
    return v


def quotient_checks(n: int) -> Dict[str, Any]:
    """M: distinct upper indices, where E = 0 and T^2 = 1. N: all uppers 1, where E = 1 and (T-u)(T+1) = 0."""
    field = QU
    u = field.u
    lowers = list(product(range(1, n + 1), repeat=n))
    m_keys = [tuple(zip(low, ups)) for low in lowers for ups in (w.images for w in all_permutations(n))]
    n_keys = [tuple((i, 1) for i in low) for low in lowers]
    m_fail, n_fail = [], []
    for key in m_keys:
        v = TensorVector(n, {key: 1}, field)
        for k in range(1, n):
            if act_E(k, v) or act_T(k, act_T(k, v)) != v:
                m_fail.append({"key": [list(p) for p in key], "k": k})
    for key in n_keys:
        v = TensorVector(n, {key: 1}, field)
        for k in range(1, n):
            tv = act_T(k, v)
            quadratic = act_T(k, tv) - tv.scale(u - 1) - v.scale(u)
            if act_E(k, v) != v or quadratic:
                n_fail.append({"key": [list(p) for p in key], "k": k})
    perms = all_permutations(n)
    m_seed = TensorVector(n, {tuple((1, j) for j in range(1, n + 1)): 1}, field)
    n_seed = TensorVector(n, {tuple((i, 1) for i in range(1, n + 1)): 1}, field)
    m_rank = _span_rank([_t_word_action(w, m_seed) for w in perms])
    n_rank = _span_rank([_t_word_action(w, n_seed) for w in perms])
    expected = factorial(n)
    report = {
        "n": n,
        "M": {"vectors": len(m_keys), "failures": m_fail[:20], "rank": m_rank, "expected": expected},
        "N": {"vectors": len(n_keys), "failures": n_fail[:20], "rank": n_rank, "expected": expected},
    }
    report["M"]["pass"] = not m_fail and m_rank == expected
    report["N"]["pass"] = not n_fail and n_rank == expected
    report["pass"] = report["M"]["pass"] and report["N"]["pass"]
    return report
