import math
import warnings

import numpy as np

from ..core import work_counter
from ..errors import BudgetError, BudgetExhaustedError
from .report import SolveReport
from .sampling import RNG_ALGORITHM, SamplingDistribution, make_rng
from .state import init_state, step
from .theory import expected_error_ratio, n1_iterations

DRAW_BATCH_SIZE = 4096


class IterationBudget:
    """How long run() may iterate.

    Args:
        max_iters (int or None): Hard cap on the number of steps. 0 returns x_0 unchanged.
        target_error (float or None): Stop as soon as the measured error (from an oracle or a
            monitor) is at or below this value.
    """

    def __init__(self, max_iters=None, target_error=None):
        if max_iters is None and target_error is None:
            raise BudgetError("An iteration budget needs max_iters, target_error or both.")
        if max_iters is not None and max_iters < 0:
            raise BudgetError("max_iters must be >= 0, not {0}".format(max_iters))
        if target_error is not None and not target_error > 0:
            raise BudgetError("target_error must be positive, not {0}".format(target_error))
        self.max_iters = None if max_iters is None else int(max_iters)
        self.target_error = target_error

    @classmethod
    def coerce(cls, budget):
        if isinstance(budget, IterationBudget):
            return budget
        if isinstance(budget, dict):
            return cls(**budget)
        return cls(max_iters=budget)

    def to_dict(self):
        return {"max_iters": self.max_iters, "target_error": self.target_error}

    def __repr__(self):
        return "<IterationBudget> max_iters={0}, target_error={1}".format(self.max_iters, self.target_error)


def is_checkpoint(t, trace_stride=None):
    """Checkpoints are t = 0, powers of two, and multiples of trace_stride."""
    if t == 0 or (t & (t - 1)) == 0:
        return True
    return bool(trace_stride) and t % trace_stride == 0


def run(f, x0, budget, seed=0, oracle=None, monitor=None, observer=None, trace_stride=None, rhs=None,
        sigma_min_sq=None, strict=False, debug=False):
    """Run sampled projection steps on a factorization Q = CD.

    Args:
        f (KSparseFactorization): The factorization.
        x0: h_0 with x_0 = C h_0 (SparseVector or dense, dim p).
        budget (IterationBudget, dict or int): When to stop.
        seed (int): Seed of the PCG64 generator that draws the columns.
        oracle (ndarray or None): The limit point x*. When given, error_trace records
            ||x_t - x*|| / ||x*|| (or ||x_t - x*|| if x* = 0) at the checkpoints.
        monitor (callable or None): monitor(t, x_t) -> float, an error estimate used when no
            oracle is given, ie. a residual norm.
        observer (callable or None): observer(t, x_t) called at every checkpoint.
        trace_stride (int or None): Extra checkpoints at multiples of this stride.
        rhs (array-like or None): Offsets r_j so that step j projects onto q_j^T x = r_j.
        sigma_min_sq (float or None): sigma_min^2(Q) or a lower bound, for the theory fields.
        strict (bool): Raise BudgetExhaustedError when a target_error is not reached.
        debug (bool): Print progress at the checkpoints.

    Returns:
        (state, report): the final IterationState and a SolveReport.
    """
    budget = IterationBudget.coerce(budget)
    tracking = oracle is not None or monitor is not None or observer is not None
    if budget.max_iters is None:
        if budget.target_error is None or (oracle is None and monitor is None):
            raise BudgetError("A target_error needs an oracle or a monitor, or an explicit max_iters.")
        if sigma_min_sq is None:
            raise BudgetError("A target_error without max_iters needs sigma_min_sq to bound the run.")
        decades = max(1, math.ceil(2.0 * math.log10(1.0 / min(budget.target_error, 0.1))))
        max_iters = 10 * int(math.ceil(decades * n1_iterations(sigma_min_sq, f.frob_sq)))
    else:
        max_iters = budget.max_iters

    if oracle is not None:
        oracle = np.asarray(oracle, dtype=np.float64)
        oracle_norm = float(np.linalg.norm(oracle))
    C = f.C.to_scipy()

    def measure_error(t, h):
        x = C @ h
        if observer is not None:
            observer(t, x)
        if oracle is not None:
            diff = float(np.linalg.norm(x - oracle))
            return diff / oracle_norm if oracle_norm > 0 else diff
        if monitor is not None:
            return float(monitor(t, x))
        return None

    total_before = work_counter.value
    state = init_state(f, x0)
    setup_work = dict(f.setup_work)
    setup_work["init"] = state.work

    error_trace = []
    error = None
    converged = None
    if tracking:
        error = measure_error(0, state.h)
        if error is not None:
            error_trace.append([0, error])
            if budget.target_error is not None:
                converged = error <= budget.target_error

    dist = SamplingDistribution(f.col_sq_norms, seed)
    rng = make_rng(seed)
    step_work_sum = 0
    step_work_max = 0
    draws = np.zeros(0, dtype=np.int64)
    cursor = 0
    while state.t < max_iters and not converged:
        if cursor == draws.shape[0]:
            draws = dist.draw(rng, min(DRAW_BATCH_SIZE, max_iters - state.t))
            cursor = 0
        j = int(draws[cursor])
        cursor += 1
        before = state.work
        step(state, f, j, rhs)
        spent = state.work - before
        step_work_sum += spent
        if spent > step_work_max:
            step_work_max = spent
        t = state.t
        if tracking and (is_checkpoint(t, trace_stride) or t == max_iters):
            error = measure_error(t, state.h)
            if error is not None:
                error_trace.append([t, error])
                if budget.target_error is not None:
                    converged = error <= budget.target_error
            if debug:
                print("t={0}, error={1}".format(t, error))

    theory = {"frob_sq": f.frob_sq, "sigma_min_sq": sigma_min_sq}
    if sigma_min_sq is not None and 0.0 < sigma_min_sq < f.frob_sq:
        theory["N1"] = n1_iterations(sigma_min_sq, f.frob_sq)
        theory["expected_error_ratio"] = expected_error_ratio(sigma_min_sq, f.frob_sq, state.t)
    if error is None and "expected_error_ratio" in theory:
        error = math.sqrt(theory["expected_error_ratio"])

    stalled = budget.target_error is not None and converged is False
    report = SolveReport(
        iterations=state.t,
        final_error_estimate=error,
        error_trace=error_trace,
        work_per_iteration={
            "mean": step_work_sum / state.t if state.t else 0.0,
            "max": int(step_work_max),
        },
        k=f.k,
        theory=theory,
        rng={"algorithm": RNG_ALGORITHM, "seed": int(seed)},
        budget={"max_iters": int(max_iters), "target_error": budget.target_error},
        converged=converged,
        stalled=stalled,
        setup_work=setup_work,
        total_work=int(work_counter.value - total_before),
        pk=int(f.p * f.k),
        m=f.m,
        n=f.n,
        p=f.p,
    )
    if stalled:
        message = "Budget of {0} iterations exhausted with error {1} above the target {2}".format(
            max_iters, error, budget.target_error
        )
        if strict:
            raise BudgetExhaustedError(message, report=report)
        warnings.warn(message, RuntimeWarning)
    return state, report
