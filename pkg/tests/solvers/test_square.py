import warnings

import numpy as np
import pytest

from ksparse.core import ColMajorSparseMatrix
from ksparse.errors import BudgetExhaustedError, DimensionMismatchError
from ksparse.factorization import trivial_factorization
from ksparse.solvers import solve_square


def factorize(A):
    return trivial_factorization(ColMajorSparseMatrix.from_dense(np.asarray(A, dtype=np.float64)))


class TestSolveSquare:
    def test_identity(self):
        b = np.array([1.0, -2.0, 3.0])
        y, report = solve_square(factorize(np.eye(3)), b)
        assert np.allclose(y, b)
        assert report.solver == "square"
        assert report.converged
        assert report.residual <= 1e-6

    def test_path_incidence(self):
        A = np.array([[1.0, -1.0, 0.0], [0.0, 1.0, -1.0], [0.0, 0.0, 1.0]])
        b = np.array([1.0, 2.0, 3.0])
        y, report = solve_square(factorize(A), b, eps=1e-10, seed=4)
        assert np.allclose(y, np.linalg.solve(A, b), atol=1e-7)

    def test_least_squares(self):
        rng = np.random.default_rng(2)
        A = rng.standard_normal((8, 3))
        b = rng.standard_normal(8)
        y, report = solve_square(factorize(A), b, eps=1e-8)
        expected = np.linalg.lstsq(A, b, rcond=None)[0]
        assert np.linalg.norm(y - expected) <= 1e-5 * np.linalg.norm(expected)
        assert report.solver == "least-squares"
        assert report.converged is None

    def test_zero_rhs(self):
        y, report = solve_square(factorize(np.eye(2)), np.zeros(2))
        assert y.tolist() == [0.0, 0.0]
        assert report.iterations == 0

    def test_starting_point(self):
        b = np.array([2.0, 4.0])
        y, report = solve_square(factorize(np.diag([1.0, 2.0])), b, y0=[2.0, 2.0])
        assert y.tolist() == [2.0, 2.0]
        assert report.iterations == 0

    def test_stalled(self):
        f = factorize([[1.0, 1.0], [1.0, 1.0]])
        with pytest.warns(RuntimeWarning):
            _, report = solve_square(f, [1.0, 0.0], max_iters=50)
        assert report.stalled
        with pytest.raises(BudgetExhaustedError):
            solve_square(f, [1.0, 0.0], max_iters=50, strict=True)

    def test_dimensions(self):
        with pytest.raises(DimensionMismatchError):
            solve_square(factorize(np.eye(2)), np.ones(3))
        with pytest.raises(DimensionMismatchError):
            solve_square(factorize(np.eye(2)), np.ones(2), y0=np.ones(3))
