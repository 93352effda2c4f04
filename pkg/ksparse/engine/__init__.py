from .state import IterationState, init_state, step, recover_x
from .sampling import RNG_ALGORITHM, SamplingDistribution, sample_column, make_rng
from .report import SCHEMA_VERSION, SolveReport
from .runner import IterationBudget, is_checkpoint, run
from .theory import (
    dense_singular_values,
    dense_sigma_min_sq,
    n1_iterations,
    kappa_n1_iterations,
    predict_iterations,
    expected_error_ratio,
    decades_for,
)
from .kaczmarz import kaczmarz_factorization, solve_kaczmarz

__all__ = [
    "IterationState",
    "init_state",
    "step",
    "recover_x",
    "RNG_ALGORITHM",
    "SamplingDistribution",
    "sample_column",
    "make_rng",
    "SCHEMA_VERSION",
    "SolveReport",
    "IterationBudget",
    "is_checkpoint",
    "run",
    "dense_singular_values",
    "dense_sigma_min_sq",
    "n1_iterations",
    "kappa_n1_iterations",
    "predict_iterations",
    "expected_error_ratio",
    "decades_for",
    "kaczmarz_factorization",
    "solve_kaczmarz",
]
