import numpy as np
import pytest

from ksparse.core import ColMajorSparseMatrix
from ksparse.errors import FactorizationError
from ksparse.factorization import forward_overlaps, sparsity_index

from ..util import brute_force_sparsity_index, random_sparse


class TestForwardOverlaps:
    def test_identity(self):
        assert forward_overlaps(ColMajorSparseMatrix.identity(3)) == [{0}, {1}, {2}]

    def test_chain(self):
        C = ColMajorSparseMatrix.from_dense(
            np.array(
                [
                    [1.0, 0.0, 0.0],
                    [1.0, 1.0, 0.0],
                    [0.0, 1.0, 0.0],
                    [0.0, 0.0, 1.0],
                ]
            )
        )
        assert forward_overlaps(C) == [{0, 1}, {1}, {2}]

    def test_self_in_overlap(self):
        C = random_sparse(12, 15, 3, seed=2)
        for i, overlap in enumerate(forward_overlaps(C)):
            assert i in overlap
            assert min(overlap) == i

    def test_zero_column(self):
        C = ColMajorSparseMatrix.from_dense(np.array([[1.0, 0.0], [0.0, 0.0]]))
        with pytest.raises(FactorizationError):
            forward_overlaps(C)


class TestSparsityIndex:
    def test_identity_left_factor(self):
        Q = random_sparse(9, 7, 4, seed=1)
        assert sparsity_index(ColMajorSparseMatrix.identity(9), Q) == Q.max_column_support()

    def test_brute_force(self):
        for seed in range(10):
            C = random_sparse(8, 8, 2, seed=seed)
            D = random_sparse(8, 8, 2, seed=100 + seed)
            assert sparsity_index(C, D) == brute_force_sparsity_index(C, D)

    def test_column_scaling(self):
        C = random_sparse(10, 6, 3, seed=4)
        D = random_sparse(6, 9, 2, seed=5)
        scales = np.array([2.0, -1.0, 0.5, 3.0, -7.0, 1.0, 4.0, 0.25, -2.0])
        scaled = ColMajorSparseMatrix.from_dense(D.densify() * scales)
        assert sparsity_index(C, scaled) == sparsity_index(C, D)

    def test_zero_row_of_D(self):
        C = ColMajorSparseMatrix.identity(2)
        D = ColMajorSparseMatrix.from_dense(np.array([[1.0, 1.0], [0.0, 0.0]]))
        with pytest.raises(FactorizationError):
            sparsity_index(C, D)

    def test_augmented_rows_may_be_zero(self):
        C = ColMajorSparseMatrix.identity(2)
        D = ColMajorSparseMatrix.from_dense(np.array([[0.0, 0.0], [1.0, 1.0]]))
        assert sparsity_index(C, D, augmented_rows=1) == 1
