from app.services.specht.symmetrizers import (
    GyojaElement,
    Symmetrizers,
    epsilon_sum,
    group_mul,
    gyoja_element,
    gyoja_proportionality,
    iota,
    iota_sn_absorbs,
    proportionality,
    symmetric_proportionality,
    symmetrizers,
)
from app.services.specht.construction import (
    BlockStructure,
    SpechtModule,
    block_permutation,
    block_permutation_law,
    block_structure,
    e_Lambda,
    e_Lambda_factors,
    e_action_check,
    e_lambda_image,
    specht_module,
    specht_seed,
    v_Lambda,
    w_Lambda,
)
from app.services.specht.tensor_form import form_invariance, seed_norms, tensor_form, weight_exponent
from app.services.specht.classification import (
    classification_report,
    diagnostics_report,
    e_action_report,
    fingerprint,
    futurereference_check,
    proportionality_report,
    pullback_labels,
    simplicity_witness,
    specht_dimension,
)

__all__ = [
    "GyojaElement",
    "Symmetrizers",
    "epsilon_sum",
    "group_mul",
    "gyoja_element",
    "gyoja_proportionality",
    "iota",
    "iota_sn_absorbs",
    "proportionality",
    "symmetric_proportionality",
    "symmetrizers",
    "BlockStructure",
    "SpechtModule",
    "block_permutation",
    "block_permutation_law",
    "block_structure",
    "e_Lambda",
    "e_Lambda_factors",
    "e_action_check",
    "e_lambda_image",
    "specht_module",
    "specht_seed",
    "v_Lambda",
    "w_Lambda",
    "form_invariance",
    "seed_norms",
    "tensor_form",
    "weight_exponent",
    "classification_report",
    "diagnostics_report",
    "e_action_report",
    "fingerprint",
    "futurereference_check",
    "proportionality_report",
    "pullback_labels",
    "simplicity_witness",
    "specht_dimension",
]
