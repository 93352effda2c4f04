import numpy as np

from ..core import SparseVector, as_dense_vector, sparse_dense_dot, work_counter
from ..errors import DimensionMismatchError


class IterationState:
    """The dual representation of an iterate: x_t = C h, g = U^T h, and x_t = x_0 + Q y.

    A state is owned by one run and updated in place by step().
    """

    def __init__(self, h, g, y, t=0, work=0):
        self.h = h
        self.g = g
        self.y = y
        self.t = t
        self.work = work

    def copy(self):
        return IterationState(self.h.copy(), self.g.copy(), self.y.copy(), self.t, self.work)

    def __repr__(self):
        return "<IterationState> t={0}, work={1}".format(self.t, self.work)


def init_state(f, x0_coeffs):
    """Create the initial state for a factorization.

    Args:
        f (KSparseFactorization): The factorization Q = CD.
        x0_coeffs (SparseVector or array-like): h_0 with x_0 = C h_0, of dim p. For an
            identity-augmented factorization this is x_0 padded with zeros.
    Returns:
        state: h = h_0, g = U^T h_0, y = 0, t = 0. Computing g costs one multiply-add per stored
            entry of the rows of U selected by supp(h_0).
    """
    if isinstance(x0_coeffs, SparseVector):
        if x0_coeffs.dim != f.p:
            raise DimensionMismatchError(
                "h_0 has dim {0}, the factorization has p={1}".format(x0_coeffs.dim, f.p)
            )
        h = x0_coeffs.to_dense()
    else:
        h = as_dense_vector(x0_coeffs, f.p)
    with work_counter.measure() as spent:
        g = f.Ut.matvec(h)
    return IterationState(h, np.asarray(g, dtype=np.float64), np.zeros(f.n), 0, spent.value)


def step(state, f, j, rhs=None):
    """Project the iterate onto the hyperplane orthogonal to column q_j of Q.

    alpha = (g . d_j + h . e_j - rhs_j) / ||q_j||^2, then h -= alpha d_j, g -= alpha e_j and
    y_j -= alpha. The whole step costs 2(|d_j| + |e_j|) <= 4k multiply-adds.

    Args:
        state (IterationState): Updated in place and returned.
        f (KSparseFactorization): The factorization.
        j (int): Column index of Q.
        rhs (array-like or None): Offsets r_j, turning the projection onto q_j^T x = r_j.
    """
    d = f.D_cols[j]
    e = f.E_cols[j]
    before = work_counter.value
    inner = sparse_dense_dot(d, state.g) + sparse_dense_dot(e, state.h)
    if rhs is not None:
        inner -= rhs[j]
    alpha = inner / f.col_sq_norms[j]
    state.h[d.indices] -= alpha * d.values
    state.g[e.indices] -= alpha * e.values
    work_counter.add(d.nnz + e.nnz)
    state.y[j] -= alpha
    state.t += 1
    state.work += work_counter.value - before
    return state


def recover_x(state, f):
    """x_t = C h, densified with one multiply-add per stored entry of the active columns of C."""
    return f.C.matvec(state.h)
