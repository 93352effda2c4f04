from .overlap import forward_overlaps, sparsity_index, overlap_union_sizes
from .gram import build_gram_split, precompute_columns
from .factorization import KSparseFactorization, ValidationReport, validate
from .compose import (
    drop_unused_pairs,
    stack,
    right_multiply,
    trivial_left,
    trivial_right,
    trivial_factorization,
    rank_factorization,
)

__all__ = [
    "forward_overlaps",
    "sparsity_index",
    "overlap_union_sizes",
    "build_gram_split",
    "precompute_columns",
    "KSparseFactorization",
    "ValidationReport",
    "validate",
    "drop_unused_pairs",
    "stack",
    "right_multiply",
    "trivial_left",
    "trivial_right",
    "trivial_factorization",
    "rank_factorization",
]
