import math

import numpy as np
import pytest

from ksparse.core import ColMajorSparseMatrix
from ksparse.engine import (
    decades_for,
    dense_sigma_min_sq,
    expected_error_ratio,
    kappa_n1_iterations,
    n1_iterations,
    predict_iterations,
)
from ksparse.errors import BudgetError
from ksparse.factorization import trivial_factorization


class TestTheory:
    def test_n1(self):
        assert math.isclose(n1_iterations(1.0, 10.0), -math.log(10.0) / math.log(0.9))

    def test_n1_out_of_range(self):
        with pytest.raises(BudgetError):
            n1_iterations(0.0, 1.0)
        with pytest.raises(BudgetError):
            n1_iterations(2.0, 1.0)

    def test_kappa(self):
        assert math.isclose(kappa_n1_iterations(5.0), 5.0 * math.log(10.0))

    def test_sigma_min(self):
        Q = np.diag([3.0, 2.0, 0.0])
        assert math.isclose(dense_sigma_min_sq(Q), 4.0)

    def test_predict(self):
        f = trivial_factorization(ColMajorSparseMatrix.from_dense(np.diag([1.0, 2.0, 3.0])))
        assert predict_iterations(f, 0) == 0
        n1 = n1_iterations(1.0, 14.0)
        assert predict_iterations(f, 3) == math.ceil(3 * n1)
        assert predict_iterations(f, 2, sigma_min_sq=0.5) == math.ceil(2 * n1_iterations(0.5, 14.0))

    def test_predict_negative(self):
        f = trivial_factorization(ColMajorSparseMatrix.identity(2))
        with pytest.raises(BudgetError):
            predict_iterations(f, -1, sigma_min_sq=0.5)

    def test_expected_ratio(self):
        assert expected_error_ratio(1.0, 4.0, 0) == 1.0
        assert math.isclose(expected_error_ratio(1.0, 4.0, 2), 0.5625)

    def test_decades(self):
        assert decades_for(0.3) == 2
        assert decades_for(2e-6) == 12
        assert decades_for(0.5, initial_ratio=0.1) == 0
