import numpy as np
import scipy.sparse as sp

from ..core import ColMajorSparseMatrix, work_counter
from ..errors import DimensionMismatchError, FactorizationError


def build_gram_split(C):
    """Compute the upper-triangular U with C^T C = U^T + U.

    The diagonal is split evenly, diag(U) = 1/2 diag(C^T C), and U[i, j] = c_i . c_j for i < j,
    so row i of U is supported on FO(c_i). Every row of C with s stored entries contributes
    s(s+1)/2 multiply-adds, which are added to the work counter.

    Args:
        C (ColMajorSparseMatrix): A matrix without zero columns.
    Returns:
        U: A p x p ColMajorSparseMatrix.
    """
    zero = C.zero_columns()
    if zero.size:
        raise FactorizationError("column {0} of C is zero".format(int(zero[0])))
    row_sizes = C.row_support_sizes()
    work_counter.add(int((row_sizes * (row_sizes + 1) // 2).sum()))
    csc = C.to_scipy()
    gram = (csc.T @ csc).tocsc()
    U = sp.triu(gram, k=1, format="csc") + sp.diags(0.5 * gram.diagonal(), format="csc")
    return ColMajorSparseMatrix.from_scipy(U)


def precompute_columns(C, D, U):
    """Compute e_j = U^T d_j and the squared column norms ||q_j||^2 = 2 d_j . e_j.

    Returns:
        (E, col_sq_norms): E is the p x n ColMajorSparseMatrix whose columns are the e_j,
            col_sq_norms a float64 array of length n.
    Raises:
        FactorizationError: if a squared norm is not positive, ie. Q has a zero column.
    """
    if C.cols != D.rows or U.shape != (C.cols, C.cols):
        raise DimensionMismatchError(
            "Incompatible shapes C {0}, D {1}, U {2}".format(C.shape, D.shape, U.shape)
        )
    Ut = U.transpose()
    E = Ut.matmul(D)
    Dcsc = D.to_scipy()
    work_counter.add(D.nnz)
    col_sq_norms = 2.0 * np.asarray(Dcsc.multiply(E.to_scipy()).sum(axis=0)).reshape(-1)
    bad = np.flatnonzero(~(col_sq_norms > 0.0))
    if bad.size:
        raise FactorizationError(
            "column {0} of Q = CD has squared norm {1}; Q must not have zero columns".format(
                int(bad[0]), col_sq_norms[bad[0]]
            )
        )
    return E, col_sq_norms
