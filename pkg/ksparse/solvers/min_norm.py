import math

import numpy as np
import scipy.sparse as sp

from ..core import ColMajorSparseMatrix
from ..engine import IterationBudget, SolveReport, recover_x, run
from ..engine.theory import dense_sigma_min_sq, kappa_n1_iterations, n1_iterations
from ..errors import DimensionMismatchError, IncompatibleSystemError
from ..factorization import KSparseFactorization, drop_unused_pairs

COMPATIBILITY_TOL = 1e-8


def build_nullspace_Q(split):
    """Factorize the null-space basis Q = [E^{-1} F; -I] of A = [E F].

    With E^{-1} = C D the factorization is Q = [[C, 0], [0, I]] . [[D F], [-I]], prefixed by an identity
    augmentation so that x_0 = (E^{-1} b, 0) is C' h_0 with h_0 = x_0 padded with zeros. The sparsity
    index is at most k f + 1 with k the index of E^{-1} and f the largest column support of F.

    Returns:
        f: A KSparseFactorization, or None when F has no columns.
    """
    F = split.F
    if F.cols == 0:
        return None
    m = split.m
    einv = split.einv
    C0, DF = drop_unused_pairs(einv.C, einv.D.matmul(F))
    fcols = F.cols
    C = sp.hstack(
        [sp.identity(m, format="csc"), sp.block_diag([C0.to_scipy(), sp.identity(fcols, format="csc")], format="csc")],
        format="csc",
    )
    D = sp.vstack(
        [sp.csc_matrix((m, fcols)), DF.to_scipy(), -sp.identity(fcols, format="csc")],
        format="csc",
    )
    return KSparseFactorization(
        ColMajorSparseMatrix.from_scipy(C),
        ColMajorSparseMatrix.from_scipy(D),
        declared_k=einv.k * max(split.f, 1) + 1,
        augmented_rows=m,
    )


def initial_point(split, b):
    """x_0 = (E^{-1} b, 0) in split order.

    Raises:
        IncompatibleSystemError: if ||A x_0 - b|| > 1e-8 ||b||.
    """
    b = np.asarray(b, dtype=np.float64)
    if b.shape[0] != split.r:
        raise DimensionMismatchError("b has length {0}, A has {1} rows".format(b.shape[0], split.r))
    x0 = np.zeros(split.m)
    x0[: split.r] = split.apply_einv(b)
    residual = float(np.linalg.norm(split.E.to_scipy() @ x0[: split.r] - b))
    b_norm = float(np.linalg.norm(b))
    if residual > COMPATIBILITY_TOL * b_norm:
        raise IncompatibleSystemError(
            "The right-hand side is incompatible: ||A x0 - b|| = {0} > {1} ||b||".format(residual, COMPATIBILITY_TOL)
        )
    return x0


def solve_min_norm(split, b, eps=1e-6, seed=0, max_iters=None, oracle=None, observer=None, trace_stride=None,
                   dense_theory=False, debug=False):
    """Approximate the minimum-norm solution of Ax = b.

    Starting from x_0 = (E^{-1} b, 0), sampled projections onto the null-space directions of A remove
    the null-space component of x_0. Every iterate satisfies A x_t = b.

    Args:
        split (SplitSystem): The split of A.
        b (array-like): Right-hand side in the split's row order.
        eps (float): Target relative error ||x - x*|| / ||x*||, in expectation.
        seed (int): Sampling seed.
        max_iters (int or None): Overrides the predicted budget ceil(2 log10(eps0/eps)) N1, where
            eps0 = 1 + sqrt(r + ||E^{-1}F||^2) bounds the initial relative error and N1 uses
            sigma_min^2(Q) >= 1.
        oracle (array-like or None): x* in original column order. The run then stops once the
            relative error is at most eps.
        observer (callable or None): observer(t, x_t) at checkpoints, x_t in original column order.
        trace_stride (int or None): Extra checkpoints at multiples of this stride.
        dense_theory (bool): Compute sigma_min^2(Q) by dense SVD for the report. Default False.
        debug (bool): Print progress.

    Returns:
        (x, report): x in original column order and a SolveReport.
    """
    x0 = initial_point(split, b)
    f = build_nullspace_Q(split)
    r = split.r
    if f is None or not np.any(x0):
        report = SolveReport(
            iterations=0,
            final_error_estimate=0.0,
            work_per_iteration={"mean": 0.0, "max": 0},
            k=0 if f is None else f.k,
            theory={},
            solver="min-norm",
            kappa=float(split.m),
            epsilon0=1.0,
            feasibility_residual=0.0,
            m=split.m,
            n=r,
        )
        return split.to_original(x0), report

    frob_sq = f.frob_sq
    einv_f_sq = frob_sq - split.F.cols
    kappa = split.m + einv_f_sq
    epsilon0 = 1.0 + math.sqrt(r + einv_f_sq)
    sigma_lower_bound = 1.0
    n1 = n1_iterations(sigma_lower_bound, frob_sq) if sigma_lower_bound < frob_sq else 1.0
    if max_iters is None:
        decades = max(1, math.ceil(2.0 * math.log10(epsilon0 / eps)))
        max_iters = int(math.ceil(decades * n1))
    sigma_min_sq = dense_sigma_min_sq(f) if dense_theory else None

    h0 = np.zeros(f.p)
    h0[: split.m] = x0
    oracle_split = None if oracle is None else split.to_split(np.asarray(oracle, dtype=np.float64))
    observe = None
    if observer is not None:
        def observe(t, x):
            observer(t, split.to_original(x))

    budget = IterationBudget(max_iters=max_iters, target_error=eps if oracle is not None else None)
    state, report = run(
        f,
        h0,
        budget,
        seed=seed,
        oracle=oracle_split,
        observer=observe,
        trace_stride=trace_stride,
        sigma_min_sq=sigma_min_sq,
        debug=debug,
    )
    x = recover_x(state, f)
    b = np.asarray(b, dtype=np.float64)
    residual = float(np.linalg.norm(split.A.to_scipy() @ x - b))
    b_norm = float(np.linalg.norm(b))
    theory = dict(report.theory)
    theory["sigma_min_sq_lower_bound"] = sigma_lower_bound
    theory["N1_bound"] = n1
    theory["N1_kappa"] = kappa_n1_iterations(kappa)
    report.update(
        solver="min-norm",
        theory=theory,
        kappa=kappa,
        epsilon0=epsilon0,
        feasibility_residual=residual / b_norm if b_norm > 0 else residual,
        stretch=split.stretch,
    )
    return split.to_original(x), report
