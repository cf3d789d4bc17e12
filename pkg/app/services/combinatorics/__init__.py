from app.services.combinatorics.permutations import Permutation, all_permutations, permutations_of
from app.services.combinatorics.set_partitions import (
    DisjointSet,
    SetPartition,
    bell_number,
    sp_closure,
    sp_enumerate,
    sp_moebius,
)
from app.services.combinatorics.partitions import (
    IntPartition,
    TableauData,
    dominance_leq,
    partitions_of,
    standard_tableaux_count,
    tableau_data,
    total_lt,
)
from app.services.combinatorics.labels import LabelEntry, SpechtLabel, enumerate_labels

__all__ = [
    "Permutation",
    "all_permutations",
    "permutations_of",
    "DisjointSet",
    "SetPartition",
    "bell_number",
    "sp_closure",
    "sp_enumerate",
    "sp_moebius",
    "IntPartition",
    "TableauData",
    "dominance_leq",
    "partitions_of",
    "standard_tableaux_count",
    "tableau_data",
    "total_lt",
    "LabelEntry",
    "SpechtLabel",
    "enumerate_labels",
]
