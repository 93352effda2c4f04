"""Dense oracles and instance builders shared by the test modules."""
import numpy as np
import scipy.sparse as sp

from ksparse.core import ColMajorSparseMatrix


def random_sparse(rows, cols, nnz_per_col, seed=0, nonzero_rows=True):
    """A random matrix with nnz_per_col entries per column (and, if asked, no zero rows)."""
    rng = np.random.default_rng(seed)
    dense = np.zeros((rows, cols))
    for j in range(cols):
        idx = rng.choice(rows, size=min(nnz_per_col, rows), replace=False)
        dense[idx, j] = rng.uniform(0.5, 2.0, size=idx.shape[0]) * rng.choice([-1.0, 1.0], size=idx.shape[0])
    if nonzero_rows:
        for i in np.flatnonzero(~dense.any(axis=1)):
            dense[i, rng.integers(cols)] = 1.0
    return ColMajorSparseMatrix.from_dense(dense)


def brute_force_sparsity_index(C, D):
    """max_j |union over i in supp(d_j) of {l >= i : supp(c_l) meets supp(c_i)}|, straight from the definition."""
    Cd = C.densify() != 0
    Dd = D.densify() != 0
    p = Cd.shape[1]
    fo = [{l for l in range(i, p) if np.any(Cd[:, i] & Cd[:, l])} for i in range(p)]
    best = 0
    for j in range(Dd.shape[1]):
        union = set()
        for i in np.flatnonzero(Dd[:, j]):
            union |= fo[i]
        best = max(best, len(union))
    return best


def dense_min_norm(A, b):
    return np.linalg.pinv(np.asarray(A, dtype=np.float64)) @ b


def dense_laplacian(g):
    L = np.zeros((g.n, g.n))
    for u, v, w in g.edges:
        L[u, u] += w
        L[v, v] += w
        L[u, v] -= w
        L[v, u] -= w
    return L


def dense_laplacian_solution(g, c):
    return np.linalg.pinv(dense_laplacian(g)) @ c


def to_dense(matrix):
    if isinstance(matrix, ColMajorSparseMatrix):
        return matrix.densify()
    if sp.issparse(matrix):
        return matrix.toarray()
    return np.asarray(matrix, dtype=np.float64)
