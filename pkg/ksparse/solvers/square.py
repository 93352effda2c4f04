import numpy as np

from ..engine import IterationBudget, run
from ..engine.theory import decades_for, dense_singular_values, predict_iterations
from ..errors import BudgetError, DimensionMismatchError

MAX_DENSE_THEORY_ENTRIES = 10 ** 6


def solve_square(f, b, eps=1e-6, seed=0, max_iters=None, y0=None, trace_stride=None, safety=10, strict=False,
                 debug=False):
    """Solve Ay = b (square) or min ||Ay - b|| (overdetermined) by sampled projections on x = Ay - b.

    The engine runs on the identity-augmented factorization of Q = A from x_0 = A y_0 - b; its dual
    vector is the correction to y_0. For square systems the run stops as soon as ||Ay - b|| <= eps ||b||
    at a checkpoint; a run that exhausts its budget first is reported as stalled, which signals a
    rank-deficient A.

    Args:
        f (KSparseFactorization): A factorization of A.
        b (array-like): Right-hand side of length f.m.
        eps (float): Target relative residual (square) or accuracy (overdetermined).
        seed (int): Sampling seed.
        max_iters (int or None): Step cap. If None it is `safety` times the count predicted from the
            dense singular values of A.
        y0 (array-like or None): Starting point, default 0.
        strict (bool): Raise BudgetExhaustedError instead of warning when a square solve stalls.

    Returns:
        (y, report)
    """
    b = np.asarray(b, dtype=np.float64).reshape(-1)
    if b.shape[0] != f.m:
        raise DimensionMismatchError("b has length {0}, A has {1} rows".format(b.shape[0], f.m))
    y0 = np.zeros(f.n) if y0 is None else np.asarray(y0, dtype=np.float64).reshape(-1)
    if y0.shape[0] != f.n:
        raise DimensionMismatchError("y0 has length {0}, A has {1} columns".format(y0.shape[0], f.n))
    square = f.m == f.n
    augmented = f.with_identity()
    A = f.C.to_scipy() @ f.D.to_scipy()
    x0 = A @ y0 - b
    b_norm = float(np.linalg.norm(b))

    sigma_min_sq = None
    if max_iters is None:
        if f.m * f.n > MAX_DENSE_THEORY_ENTRIES:
            raise BudgetError("max_iters is required for systems too large for a dense singular value estimate.")
        s = dense_singular_values(f)
        s = s[s > 1e-12 * s[0]]
        sigma_min_sq = float(s[-1] ** 2)
        decades = max(1, decades_for(eps, initial_ratio=float(s[0] / s[-1])))
        bound = min(sigma_min_sq, 0.5 * augmented.frob_sq)
        max_iters = safety * predict_iterations(augmented, decades, sigma_min_sq=bound)

    monitor = None
    target = None
    if square and b_norm > 0:
        target = eps

        def monitor(t, x):
            return float(np.linalg.norm(x)) / b_norm

    if not np.any(x0):
        max_iters = 0
    h0 = np.zeros(augmented.p)
    h0[: f.m] = x0
    state, report = run(
        augmented,
        h0,
        IterationBudget(max_iters=max_iters, target_error=target),
        seed=seed,
        monitor=monitor,
        trace_stride=trace_stride,
        sigma_min_sq=sigma_min_sq,
        strict=strict,
        debug=debug,
    )
    y = y0 + state.y
    residual = float(np.linalg.norm(A @ y - b))
    report.update(
        solver="square" if square else "least-squares",
        residual=residual / b_norm if b_norm > 0 else residual,
    )
    return y, report
