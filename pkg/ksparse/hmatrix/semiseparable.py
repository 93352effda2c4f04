import numpy as np
import scipy.linalg

from ..errors import RankConditionError
from .dendrogram import build_dendrogram_halving
from .hmatrix import compress_dense


def numerical_rank(block, tol):
    if block.size == 0:
        return 0
    s = scipy.linalg.svdvals(block)
    return int(np.sum(s > tol))


def semiseparable_violations(A, p, q, tol=None):
    """Yield (i, which, rank, limit) for every violated rank condition, i 1-based.

    The conditions are rank(A[1:i+q-1, i:n]) <= q ("upper") and rank(A[i:n, 1:i+p-1]) <= p ("lower")
    for i = 1..n, in 1-based inclusive notation. Ranks count singular values above tol, which defaults
    to 1e-10 times the spectral norm of A.
    """
    A = np.asarray(A, dtype=np.float64)
    n = A.shape[0]
    if tol is None:
        tol = 1e-10 * (scipy.linalg.norm(A, 2) if A.size else 0.0)
    for i in range(1, n + 1):
        upper = A[: min(i + q - 1, n), i - 1:]
        rank = numerical_rank(upper, tol)
        if rank > q:
            yield i, "upper", rank, q
        lower = A[i - 1:, : min(i + p - 1, n)]
        rank = numerical_rank(lower, tol)
        if rank > p:
            yield i, "lower", rank, p


def is_semiseparable(A, p, q, tol=None):
    """Whether A is (p, q)-semiseparable up to the rank tolerance."""
    for _ in semiseparable_violations(A, p, q, tol):
        return False
    return True


def semiseparable_to_hmatrix(A, p, q, tol=None):
    """Convert a (p, q)-semiseparable matrix to an HMatrix of rank max(p, q) over the halving dendrogram.

    Raises:
        RankConditionError: naming the first violated condition, with the offending submatrix.
    """
    A = np.asarray(A, dtype=np.float64)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("A semiseparable matrix must be square, not {0}".format(A.shape))
    n = A.shape[0]
    for i, which, rank, limit in semiseparable_violations(A, p, q, tol):
        if which == "upper":
            block = A[: min(i + q - 1, n), i - 1:]
        else:
            block = A[i - 1:, : min(i + p - 1, n)]
        raise RankConditionError(
            "Rank condition violated at i={0} ({1} block): rank {2} > {3}".format(i, which, rank, limit),
            index=i,
            block=block,
        )
    r = max(p, q)
    return compress_dense(A, build_dendrogram_halving(n), r=r, tol=tol)
