from app.services.algebra.words import word_expand
from app.services.tensor.vectors import (
    TensorKey,
    TensorVector,
    act,
    act_E,
    act_T,
    act_Tinv,
    act_letter,
    act_word,
    key_str,
    witness_tensor,
    pure_tensors,
    relabel_upper,
    tensor_key,
    uppers_constant_on_blocks,
)
from app.services.tensor.checks import (
    action_matrix,
    default_test_vectors,
    faithfulness_certificate,
    module_axiom,
    projection_law,
    quotient_checks,
    verify_tensor_relations,
)

__all__ = [
    "word_expand",
    "TensorKey",
    "TensorVector",
    "act",
    "act_E",
    "act_T",
    "act_Tinv",
    "act_letter",
    "act_word",
    "key_str",
    "witness_tensor",
    "pure_tensors",
    "relabel_upper",
    "tensor_key",
    "uppers_constant_on_blocks",
    "action_matrix",
    "default_test_vectors",
    "faithfulness_certificate",
    "module_axiom",
    "projection_law",
    "quotient_checks",
    "verify_tensor_relations",
]
