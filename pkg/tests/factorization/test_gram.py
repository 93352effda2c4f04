import numpy as np
import pytest

from ksparse.core import ColMajorSparseMatrix, work_counter
from ksparse.errors import FactorizationError
from ksparse.factorization import build_gram_split, precompute_columns

from ..util import random_sparse


class TestGramSplit:
    def test_identity(self):
        U = build_gram_split(ColMajorSparseMatrix.identity(3))
        assert np.array_equal(U.densify(), 0.5 * np.eye(3))

    def test_two_columns(self):
        C = ColMajorSparseMatrix.from_dense(np.array([[1.0, 1.0], [0.0, 1.0]]))
        assert np.array_equal(build_gram_split(C).densify(), np.array([[0.5, 1.0], [0.0, 1.0]]))

    def test_reconstruction(self):
        for seed in range(5):
            C = random_sparse(200, 500, 3, seed=seed)
            U = build_gram_split(C).densify()
            gram = C.densify().T @ C.densify()
            assert np.allclose(np.tril(U, -1), 0.0)
            assert np.abs(U + U.T - gram).max() <= 1e-12 * np.abs(gram).max()

    def test_work(self):
        C = ColMajorSparseMatrix.from_dense(np.array([[1.0, 1.0, 1.0], [0.0, 1.0, 0.0]]))
        with work_counter.measure() as spent:
            build_gram_split(C)
        # rows with 3 and 1 stored entries
        assert spent.value == 6 + 1


class TestPrecomputeColumns:
    def test_identity(self):
        eye = ColMajorSparseMatrix.identity(3)
        E, norms = precompute_columns(eye, eye, build_gram_split(eye))
        assert np.array_equal(E.densify(), 0.5 * np.eye(3))
        assert norms.tolist() == [1.0, 1.0, 1.0]

    def test_norm_identity(self):
        C = random_sparse(30, 20, 3, seed=7)
        D = random_sparse(20, 25, 2, seed=8)
        _, norms = precompute_columns(C, D, build_gram_split(C))
        Q = C.densify() @ D.densify()
        dense = np.sum(Q * Q, axis=0)
        assert np.all(np.abs(norms - dense) <= 1e-10 * dense)

    def test_zero_column_of_Q(self):
        eye = ColMajorSparseMatrix.identity(2)
        D = ColMajorSparseMatrix.from_dense(np.array([[1.0, 0.0], [1.0, 0.0]]))
        with pytest.raises(FactorizationError):
            precompute_columns(eye, D, build_gram_split(eye))
