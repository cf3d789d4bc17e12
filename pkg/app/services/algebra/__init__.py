from app.services.algebra.element import AlgebraElement, BasisKey, basis_keys
from app.services.algebra.product import basis_product, mul, mul_all, times_simple
from app.services.algebra.generators import E, T, T_perm, T_perm_inverse, Tinv, e_pair, e_set, gen
from app.services.algebra.words import GeneratorWord, Letter, flip, pair_word, word_expand
from app.services.algebra.involutions import (
    epsilon,
    form,
    gram_matrix,
    gram_report,
    iota_injectivity,
    moebius_coefficient,
    moebius_report,
    specialize,
    star,
    top_key,
)
from app.services.algebra.hecke import group_project, hecke_mul, hecke_project, in_hecke_span
from app.services.algebra.relations import RelationInstance, relation_instances, verify_relations
from app.services.algebra.parser import parse_scalar, parse_word

__all__ = [
    "AlgebraElement",
    "BasisKey",
    "basis_keys",
    "basis_product",
    "mul",
    "mul_all",
    "times_simple",
    "E",
    "T",
    "T_perm",
    "T_perm_inverse",
    "Tinv",
    "e_pair",
    "e_set",
    "gen",
    "GeneratorWord",
    "Letter",
    "flip",
    "pair_word",
    "word_expand",
    "epsilon",
    "form",
    "gram_matrix",
    "gram_report",
    "iota_injectivity",
    "moebius_coefficient",
    "moebius_report",
    "specialize",
    "star",
    "top_key",
    "group_project",
    "hecke_mul",
    "hecke_project",
    "in_hecke_span",
    "RelationInstance",
    "relation_instances",
    "verify_relations",
    "parse_scalar",
    "parse_word",
]
