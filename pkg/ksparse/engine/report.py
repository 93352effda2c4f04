from ..common import BaseRecord

SCHEMA_VERSION = 1


class SolveReport(BaseRecord):
    """The telemetry of one solve, serialized to JSON by the CLI.

    The required fields are iterations, final_error_estimate, error_trace, work_per_iteration,
    k and theory. Solvers add the fields that apply to them, ie. kappa and epsilon0 for
    minimum-norm solves or stretch and tree_strategy for Laplacian solves. Fields left as None
    are omitted from the JSON.
    """

    _ALLOWED_KEYS = {
        "schema",
        "solver",
        "iterations",
        "final_error_estimate",
        "error_trace",
        "work_per_iteration",
        "k",
        "theory",
        "rng",
        "budget",
        "converged",
        "stalled",
        "setup_work",
        "total_work",
        "pk",
        "m",
        "n",
        "p",
        "kappa",
        "epsilon0",
        "feasibility_residual",
        "residual",
        "stretch",
        "tree_strategy",
        "grounded",
        "inner_eps",
        "l_error",
        "error_transfer",
    }
    _SCHEMA = "solve_report"

    def __init__(self, iterations=0, final_error_estimate=None, error_trace=None, work_per_iteration=None,
                 k=None, theory=None, schema=SCHEMA_VERSION, **kwargs):
        self.schema = schema
        self.iterations = iterations
        self.final_error_estimate = final_error_estimate
        self.error_trace = error_trace if error_trace is not None else []
        self.work_per_iteration = work_per_iteration if work_per_iteration is not None else {"mean": 0.0, "max": 0}
        self.k = k
        self.theory = theory if theory is not None else {}
        for key in self._ALLOWED_KEYS:
            if not hasattr(self, key):
                setattr(self, key, None)
        for key, value in kwargs.items():
            if key not in self._ALLOWED_KEYS:
                raise ValueError("Invalid SolveReport field: {0}".format(key))
            setattr(self, key, value)

    def update(self, **kwargs):
        for key, value in kwargs.items():
            if key not in self._ALLOWED_KEYS:
                raise ValueError("Invalid SolveReport field: {0}".format(key))
            setattr(self, key, value)
        return self

    def __repr__(self):
        return "<SolveReport> {0}: {1} iterations, error estimate {2}".format(
            self.solver, self.iterations, self.final_error_estimate
        )
