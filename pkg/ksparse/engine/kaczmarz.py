"""Randomized Kaczmarz as a special case of the projection engine: with Q = I . A^T a step on
column j of Q is a projection onto the hyperplane a_j^T x = b_j.
"""
import numpy as np

from ..core import ColMajorSparseMatrix
from ..errors import BudgetError, DimensionMismatchError
from ..factorization import trivial_right
from .runner import IterationBudget, run
from .state import recover_x
from .theory import decades_for, dense_singular_values, predict_iterations

MAX_DENSE_THEORY_ENTRIES = 10 ** 6


def kaczmarz_factorization(A):
    """Factorize Q = A^T as I . A^T. The sparsity index equals the largest row support of A."""
    if not isinstance(A, ColMajorSparseMatrix):
        A = ColMajorSparseMatrix.from_dense(A)
    return trivial_right(A.transpose())


def solve_kaczmarz(A, b, eps=1e-6, seed=0, max_iters=None, trace_stride=None, safety=10, debug=False):
    """Solve a compatible system Ax = b with randomized Kaczmarz sweeps over the rows of A.

    Starting from x_0 = 0, the iterates converge to the minimum-norm solution. The run stops when
    ||Ax - b|| <= eps ||b|| at a checkpoint.

    Args:
        A (ColMajorSparseMatrix or ndarray): The m x n system matrix without zero rows.
        b (array-like): Right-hand side of length m.
        eps (float): Target relative residual.
        seed (int): Sampling seed.
        max_iters (int or None): Step cap. If None it is derived from the dense singular values of A,
            times `safety`.
    Returns:
        (x, report)
    """
    if not isinstance(A, ColMajorSparseMatrix):
        A = ColMajorSparseMatrix.from_dense(A)
    b = np.asarray(b, dtype=np.float64).reshape(-1)
    if b.shape[0] != A.rows:
        raise DimensionMismatchError("b has length {0}, A has {1} rows".format(b.shape[0], A.rows))
    f = kaczmarz_factorization(A)
    b_norm = float(np.linalg.norm(b))
    Acsc = A.to_scipy()
    sigma_min_sq = None
    if max_iters is None:
        if A.rows * A.cols > MAX_DENSE_THEORY_ENTRIES:
            raise BudgetError("max_iters is required for systems too large for a dense singular value estimate.")
        s = dense_singular_values(A)
        s = s[s > 1e-12 * s[0]]
        sigma_min_sq = float(s[-1] ** 2)
        decades = decades_for(eps, initial_ratio=float(s[0] / s[-1]))
        max_iters = safety * predict_iterations(f, max(decades, 1), sigma_min_sq=min(sigma_min_sq, 0.5 * f.frob_sq))

    def residual(t, x):
        r = float(np.linalg.norm(Acsc @ x - b))
        return r / b_norm if b_norm > 0 else r

    state, report = run(
        f,
        np.zeros(f.p),
        IterationBudget(max_iters=max_iters, target_error=eps),
        seed=seed,
        monitor=residual,
        trace_stride=trace_stride,
        rhs=b,
        sigma_min_sq=sigma_min_sq,
        debug=debug,
    )
    x = recover_x(state, f)
    report.update(solver="kaczmarz", residual=residual(state.t, x))
    return x, report
