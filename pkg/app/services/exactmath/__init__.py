from app.services.exactmath.ratfunc import RatFunc, rf_eval, random_rational
from app.services.exactmath.fields import QU, CoefficientField, at
from app.services.exactmath.linalg import (
    Echelon,
    SparseMatrix,
    matrix_rank,
    policy_rank,
    random_fields,
    rank,
    span_closure,
    specialized_rank,
)

__all__ = [
    "RatFunc",
    "rf_eval",
    "random_rational",
    "QU",
    "CoefficientField",
    "at",
    "Echelon",
    "SparseMatrix",
    "matrix_rank",
    "policy_rank",
    "random_fields",
    "rank",
    "span_closure",
    "specialized_rank",
]
