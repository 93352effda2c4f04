"""Forward overlaps of the columns of C and the sparsity index of a factorization Q = CD.

Both are computed on support patterns only: P is the 0/1 pattern of C, the upper triangle
of P^T P marks the forward overlaps, and the union over supp(d_j) is the support of column j
of triu(P^T P)^T * pattern(D).
"""
import numpy as np
import scipy.sparse as sp

from ..errors import DimensionMismatchError, FactorizationError


def _pattern(matrix):
    csc = matrix.to_scipy()
    return sp.csc_matrix(
        (np.ones(csc.nnz, dtype=np.int64), csc.indices, csc.indptr), shape=csc.shape
    )


def _check_no_zero_columns(C):
    zero = C.zero_columns()
    if zero.size:
        raise FactorizationError("column {0} of C is zero".format(int(zero[0])))


def overlap_pattern(C):
    """The p x p upper-triangular 0/1 matrix whose row i is the indicator of FO(c_i)."""
    _check_no_zero_columns(C)
    P = _pattern(C)
    return sp.triu(P.T @ P, format="csr")


def forward_overlaps(C):
    """Return FO(c_i) = {j >= i : supp(c_j) and supp(c_i) intersect} for every column of C.

    Args:
        C (ColMajorSparseMatrix): A matrix without zero columns.
    Returns:
        overlaps: list of frozensets, one per column of C. i is always in FO(c_i).
    """
    G = overlap_pattern(C)
    G.sort_indices()
    return [
        frozenset(int(j) for j in G.indices[G.indptr[i]:G.indptr[i + 1]]) for i in range(C.cols)
    ]


def overlap_union_sizes(C, D):
    """Size of the union of FO(c_i) over i in supp(d_j), for every column j of D."""
    if C.cols != D.rows:
        raise DimensionMismatchError(
            "C has {0} columns but D has {1} rows".format(C.cols, D.rows)
        )
    G = overlap_pattern(C)
    unions = (G.T.tocsr() @ _pattern(D)).tocsc()
    unions.eliminate_zeros()
    return np.diff(unions.indptr).astype(np.int64)


def sparsity_index(C, D, augmented_rows=0):
    """The tight sparsity index k of Q = CD: the largest forward-overlap union over the columns of D.

    Args:
        C (ColMajorSparseMatrix): m x p, no zero columns.
        D (ColMajorSparseMatrix): p x n.
        augmented_rows (int): Leading rows of D that belong to an identity augmentation of C
            and may be zero. Default 0.
    Raises:
        FactorizationError: if C has a zero column or D a zero row outside the augmentation.
    """
    zero_rows = D.zero_rows()
    zero_rows = zero_rows[zero_rows >= augmented_rows]
    if zero_rows.size:
        raise FactorizationError("row {0} of D is zero".format(int(zero_rows[0])))
    sizes = overlap_union_sizes(C, D)
    return int(sizes.max()) if sizes.size else 0
