import numpy as np
import scipy.sparse as sp

from ..core import ColMajorSparseMatrix
from ..errors import FactorizationError
from ..factorization import KSparseFactorization


def _place_columns(matrix, col_offset, width):
    """Embed a sparse matrix into `width` columns starting at col_offset."""
    coo = sp.coo_matrix(matrix)
    return sp.coo_matrix((coo.data, (coo.row, coo.col + col_offset)), shape=(coo.shape[0], width))


def _nonzero_pairs(left, right):
    """Drop rank-one terms whose left column or right row is exactly zero."""
    keep = np.any(left != 0.0, axis=0) & np.any(right != 0.0, axis=1)
    return left[:, keep], right[keep, :]


def assemble_block(block):
    """Sparse (C, D) with C.D equal to the dense block, laid out block row by block row:
    for block row i the columns of C_ii come first, then C_ij for j ascending. The D rows of C_ii map
    to block column i, those of C_ij to block column j.
    """
    node = block.node
    if block.is_leaf:
        if block.value == 0.0:
            raise FactorizationError(
                "Zero diagonal entry at index {0}: the fallback C = 1, D = 0 would leave a zero row of D".format(
                    node.start
                )
            )
        return sp.csc_matrix([[block.value]]), sp.csc_matrix([[1.0]])
    children = node.children
    width = node.size
    C_blocks = []
    D_parts = []
    for i, child in enumerate(children):
        C_ii, D_ii = assemble_block(block.diagonal[i])
        row_C = [C_ii]
        D_parts.append(_place_columns(D_ii, child.start - node.start, width))
        for j, other in enumerate(children):
            if j == i or (i, j) not in block.off_diagonal:
                continue
            left, right = _nonzero_pairs(*block.off_diagonal[(i, j)])
            if left.shape[1] == 0:
                continue
            row_C.append(sp.csc_matrix(left))
            D_parts.append(_place_columns(sp.csc_matrix(right), other.start - node.start, width))
        C_blocks.append(sp.hstack(row_C, format="csc"))
    C = sp.block_diag(C_blocks, format="csc")
    D = sp.vstack(D_parts, format="csc")
    return C, D


def factorize_hmatrix(H):
    """Build the sparse factorization Q = CD of an HMatrix by recursive assembly.

    The measured sparsity index never exceeds r d (d-1) (h+1) and C has at most r d^2 n columns.

    Raises:
        FactorizationError: for a zero 1x1 diagonal entry.
    """
    C, D = assemble_block(H.root)
    return KSparseFactorization(
        ColMajorSparseMatrix.from_scipy(C),
        ColMajorSparseMatrix.from_scipy(D),
        declared_k=max(H.sparsity_bound(), 1),
    )
