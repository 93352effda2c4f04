from ._version import __version__
from .errors import (
    KSparseError,
    ParseError,
    DimensionMismatchError,
    FactorizationError,
    RankConditionError,
    IncompatibleSystemError,
    DisconnectedGraphError,
    BudgetError,
    BudgetExhaustedError,
)
from .core import ColMajorSparseMatrix, SparseVector, work_counter
from .factorization import KSparseFactorization, validate
from .engine import SolveReport, run

from . import core, factorization, engine, hmatrix, graphs, solvers
