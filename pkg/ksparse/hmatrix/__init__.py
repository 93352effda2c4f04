from .dendrogram import Dendrogram, DendrogramNode, build_dendrogram_balanced, build_dendrogram_halving
from .hmatrix import HBlock, HMatrix, compress_dense, random_hmatrix, truncated_factors
from .factorize import factorize_hmatrix
from .semiseparable import is_semiseparable, semiseparable_to_hmatrix, semiseparable_violations

__all__ = [
    "Dendrogram",
    "DendrogramNode",
    "build_dendrogram_balanced",
    "build_dendrogram_halving",
    "HBlock",
    "HMatrix",
    "compress_dense",
    "random_hmatrix",
    "truncated_factors",
    "factorize_hmatrix",
    "is_semiseparable",
    "semiseparable_to_hmatrix",
    "semiseparable_violations",
]
