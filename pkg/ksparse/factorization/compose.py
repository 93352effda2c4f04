"""Constructions of new sparse factorizations from existing ones: stacking, right
multiplication, the two trivial factorizations and the SVD rank factorization.
"""
import numpy as np
import scipy.linalg
import scipy.sparse as sp

from ..core import ColMajorSparseMatrix
from ..errors import DimensionMismatchError
from .factorization import KSparseFactorization


def _as_matrix(Q):
    if isinstance(Q, ColMajorSparseMatrix):
        return Q
    if sp.issparse(Q):
        return ColMajorSparseMatrix.from_scipy(Q)
    return ColMajorSparseMatrix.from_dense(Q)


def drop_unused_pairs(C, D):
    """Remove the rows of D that are zero together with the matching columns of C.
    These pairs contribute nothing to C.D.
    """
    C = C.to_scipy()
    D = D.to_scipy() if isinstance(D, ColMajorSparseMatrix) else sp.csc_matrix(D)
    D.eliminate_zeros()
    used = np.flatnonzero(np.bincount(D.indices, minlength=D.shape[0]))
    if used.size == D.shape[0]:
        return ColMajorSparseMatrix.from_scipy(C), ColMajorSparseMatrix.from_scipy(D)
    return (
        ColMajorSparseMatrix.from_scipy(C[:, used]),
        ColMajorSparseMatrix.from_scipy(D.tocsr()[used, :]),
    )


def stack(f1, f2):
    """Factorize [Q1; Q2] as blockdiag(C1, C2) . [D1; D2]. The sparsity index is at most k1 + k2."""
    if f1.n != f2.n:
        raise DimensionMismatchError(
            "Cannot stack Q1 with {0} columns on Q2 with {1} columns".format(f1.n, f2.n)
        )
    C = sp.block_diag([f1.C.to_scipy(), f2.C.to_scipy()], format="csc")
    D = sp.vstack([f1.D.to_scipy(), f2.D.to_scipy()], format="csc")
    return KSparseFactorization(
        ColMajorSparseMatrix.from_scipy(C), ColMajorSparseMatrix.from_scipy(D), declared_k=f1.k + f2.k
    )


def right_multiply(f, F):
    """Factorize QF as C . (DF). For an f-column-sparse F the sparsity index is at most k*f.

    Rows of DF that vanish are dropped together with their C columns.
    """
    F = _as_matrix(F)
    if f.n != F.rows:
        raise DimensionMismatchError(
            "Cannot multiply Q with {0} columns by F with {1} rows".format(f.n, F.rows)
        )
    DF = f.D.matmul(F)
    C, DF = drop_unused_pairs(f.C, DF)
    return KSparseFactorization(C, DF, declared_k=f.k * max(F.max_column_support(), 1))


def trivial_left(Q):
    """Q = Q . I_n."""
    Q = _as_matrix(Q)
    return KSparseFactorization(Q, ColMajorSparseMatrix.identity(Q.cols), declared_k=Q.cols)


def trivial_right(Q):
    """Q = I_m . Q, with the identity columns of empty rows of Q dropped."""
    Q = _as_matrix(Q)
    C, D = drop_unused_pairs(ColMajorSparseMatrix.identity(Q.rows), Q)
    return KSparseFactorization(C, D, declared_k=Q.rows)


def trivial_factorization(Q):
    """Whichever of trivial_left and trivial_right has the smaller sparsity index (right on ties)."""
    right = trivial_right(Q)
    left = trivial_left(Q)
    return left if left.k < right.k else right


def rank_factorization(Q, tol=None):
    """Factorize a rank-r matrix as (U_r S_r) . V_r^T from its singular value decomposition.
    Singular values at or below tol (default 1e-12 times the largest) are discarded.
    The sparsity index is at most r.
    """
    Qd = Q.densify() if isinstance(Q, ColMajorSparseMatrix) else np.asarray(Q, dtype=np.float64)
    u, s, vh = scipy.linalg.svd(Qd, full_matrices=False)
    if tol is None:
        tol = 1e-12 * (s[0] if s.size else 0.0)
    r = int(np.sum(s > tol))
    C = ColMajorSparseMatrix.from_dense(u[:, :r] * s[:r])
    D = ColMajorSparseMatrix.from_dense(vh[:r, :])
    return KSparseFactorization(C, D, declared_k=r)
