# app/services/specht/construction.py
"""The vectors v_L, w_L, the element e_L and the Specht module S(L) = E_n(u) e_L w_L inside tensor space."""
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, List, Optional, Tuple

from app.services.algebra import AlgebraElement, BasisKey, e_set, mul
from app.services.combinatorics import Permutation, SetPartition, SpechtLabel, all_permutations, tableau_data
from app.services.errors import ConstructionError
from app.services.exactmath import QU, CoefficientField, Echelon, span_closure
from app.services.specht.symmetrizers import gyoja_element
from app.services.tensor import TensorKey, TensorVector, act, act_E, act_T


@dataclass(frozen=True)
class BlockStructure:
    label: SpechtLabel
    partition: SetPartition
    blocks: Tuple[Tuple[int, ...], ...]
    # blocks belonging to each triple of the label, in order
    groups: Tuple[Tuple[int, ...], ...]

    @property
    def l(self) -> int:
        return len(self.blocks)


@lru_cache(maxsize=None)
def block_structure(label: SpechtLabel) -> BlockStructure:
    """Consecutive intervals: m_1 blocks of size |lam^1|, then m_2 of size |lam^2|, and so on."""
    n = label.n
    blocks: List[Tuple[int, ...]] = []
    groups: List[Tuple[int, ...]] = []
    start = 1
    for entry in label.entries:
        ids = []
        for _ in range(entry.m):
            size = entry.lam.size
            blocks.append(tuple(range(start, start + size)))
            ids.append(len(blocks) - 1)
            start += size
        groups.append(tuple(ids))
    return BlockStructure(label, SetPartition(n, tuple(blocks)), tuple(blocks), tuple(groups))


def v_Lambda(label: SpechtLabel) -> TensorKey:
    """Block b carries upper index b; inside it the lower indices are 1^lam_1 2^lam_2 ..."""
    bs = block_structure(label)
    key: List[Tuple[int, int]] = []
    block_no = 0
    for entry in label.entries:
        pattern = [i + 1 for i, p in enumerate(entry.lam.parts) for _ in range(p)]
        for _ in range(entry.m):
            block_no += 1
            key += [(low, block_no) for low in pattern]
    assert len(key) == label.n and block_no == bs.l
    return tuple(key)


def block_permutation(bs: BlockStructure, group: int, sigma: Permutation) -> Permutation:
    """iota(sigma): moves the blocks of one group as sigma moves 1..m, keeping the order inside blocks."""
    n = bs.label.n
    ids = bs.groups[group]
    images = list(range(1, n + 1))
    for a, block_id in enumerate(ids):
        target = bs.blocks[ids[sigma(a + 1) - 1]]
        for x, y in zip(bs.blocks[block_id], target):
            images[x - 1] = y
    return Permutation(tuple(images))


def _t(w: Permutation, field: CoefficientField) -> AlgebraElement:
    return AlgebraElement(w.n, {BasisKey(SetPartition.bottom(w.n), w): 1}, field)


def _block_group_sum(bs: BlockStructure, pick, field: CoefficientField) -> AlgebraElement:
    """Product over groups of sum_{sigma} coeff(sigma) T_{iota(sigma)}, with (perms, coeff) = pick(entry)."""
    n = bs.label.n
    acc = AlgebraElement.identity(n, field)
    for g, entry in enumerate(bs.label.entries):
        elems, coeff = pick(entry)
        total = AlgebraElement.zero(n, field)
        for sigma in elems:
            total = total + _t(block_permutation(bs, g, sigma), field).scale(coeff(sigma))
        acc = mul(acc, total)
    return acc


def w_Lambda(label: SpechtLabel, field: CoefficientField = QU) -> TensorVector:
    """(r_{mu^1} (x) ... (x) r_{mu^k}) acting on v_L through block permutations."""
    bs = block_structure(label)
    r = _block_group_sum(bs, lambda e: (tableau_data(e.mu).row_stabilizer, lambda s: 1), field)
    return act(r, TensorVector(label.n, {v_Lambda(label): 1}, field))


def _shift(x: AlgebraElement, offset: int, n: int) -> AlgebraElement:
    """Embed a Hecke-span element of E_d into E_n on the letters offset+1 .. offset+d-1."""
    d = x.n
    terms: Dict[BasisKey, Any] = {}
    for key, c in x.terms.items():
        images = list(range(1, n + 1))
        for p in range(1, d + 1):
            images[offset + p - 1] = offset + key.perm(p)
        terms[BasisKey(SetPartition.bottom(n), Permutation(tuple(images)))] = c
    return AlgebraElement(n, terms, x.field)


@dataclass(frozen=True)
class LambdaFactors:
    columns: AlgebraElement
    hecke: AlgebraElement
    ties: AlgebraElement
    e: AlgebraElement


@lru_cache(maxsize=None)
def e_Lambda_factors(label: SpechtLabel, field: CoefficientField = QU) -> LambdaFactors:
    bs = block_structure(label)
    n = label.n
    columns = _block_group_sum(
        bs, lambda e: (tableau_data(e.mu).col_stabilizer, lambda s: s.sign()), field
    )
    hecke = AlgebraElement.identity(n, field)
    block_no = 0
    for entry in label.entries:
        c_lam = gyoja_element(entry.lam, field).c
        for _ in range(entry.m):
            hecke = mul(hecke, _shift(c_lam, bs.blocks[block_no][0] - 1, n))
            block_no += 1
    ties = e_set(bs.partition, field)
    for a, b in ((columns, hecke), (columns, ties), (hecke, ties)):
        if mul(a, b) != mul(b, a):
            raise ConstructionError(f"factors of e_L do not commute for {label}")
    return LambdaFactors(columns, hecke, ties, mul(columns, mul(hecke, ties)))


def e_Lambda(label: SpechtLabel, field: CoefficientField = QU) -> AlgebraElement:
    return e_Lambda_factors(label, field).e


# -------------------------------
# SPECHT MODULE
# -------------------------------
@dataclass
class SpechtModule:
    label: SpechtLabel
    basis: List[TensorVector]
    seed: TensorVector

    @property
    def dim(self) -> int:
        return len(self.basis)


def generator_step(n: int, field: CoefficientField):
    def step(row: Dict[TensorKey, Any]) -> List[Dict[TensorKey, Any]]:
        v = TensorVector(n, row, field)
        out = []
        for k in range(1, n):
            out.append(act_T(k, v).terms)
            out.append(act_E(k, v).terms)
        return out

    return step


def specht_seed(label: SpechtLabel, field: CoefficientField = QU) -> TensorVector:
    seed = act(e_Lambda(label, field), w_Lambda(label, field))
    if not seed:
        raise ConstructionError(f"e_L w_L vanished for {label}")
    return seed


def specht_module(label: SpechtLabel, field: CoefficientField = QU) -> SpechtModule:
    n = label.n
    seed = specht_seed(label, field)
    rows = span_closure([seed.terms], generator_step(n, field))
    return SpechtModule(label, [TensorVector(n, r, field) for r in rows], seed)


def e_action_check(label: SpechtLabel, b: SetPartition, field: CoefficientField = QU) -> bool:
    """E_B w_L = w_L when B refines A_L, 0 otherwise."""
    w = w_Lambda(label, field)
    expected = w if b.leq(block_structure(label).partition) else TensorVector.zero(label.n, field)
    return act(e_set(b, field), w) == expected


def e_lambda_image(module: SpechtModule, field: Optional[CoefficientField] = None) -> Dict[str, Any]:
    """dim of e_L S(L), and whether it is spanned by e_L w_L."""
    field = field or module.seed.field
    e = e_Lambda(module.label, field)
    ech = Echelon()
    for v in module.basis:
        ech.insert(act(e, v).terms)
    return {"dim": len(ech), "contains_seed": ech.contains(module.seed.terms)}


def block_permutation_law(label: SpechtLabel, field: CoefficientField = QU) -> bool:
    """T_{iota(sigma)} v_L is v_L with its blocks permuted."""
    bs = block_structure(label)
    v = v_Lambda(label)
    for g, entry in enumerate(label.entries):
        for sigma in all_permutations(entry.m):
            w = block_permutation(bs, g, sigma)
            moved = [None] * label.n
            for p in range(1, label.n + 1):
                moved[w(p) - 1] = v[p - 1]
            if act(_t(w, field), TensorVector(label.n, {v: 1}, field)) != TensorVector(label.n, {tuple(moved): 1}, field):
                return False
    return True
