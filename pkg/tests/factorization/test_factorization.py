import json
import os
import tempfile

import numpy as np
import pytest

from ksparse.core import ColMajorSparseMatrix, write_matrix_market
from ksparse.errors import DimensionMismatchError, FactorizationError
from ksparse.factorization import KSparseFactorization, trivial_factorization, validate

from ..util import random_sparse

tmpdirname = tempfile.TemporaryDirectory()

C = random_sparse(15, 10, 3, seed=11)
D = random_sparse(10, 12, 2, seed=12)
f = KSparseFactorization(C, D)


class TestKSparseFactorization:
    def test_shape(self):
        assert f.shape == (15, 12)
        assert f.p == 10

    def test_product(self):
        assert np.allclose(f.densify_product(), C.densify() @ D.densify())

    def test_invariants(self):
        U = f.U.densify()
        assert np.allclose(np.diag(U), 0.5 * np.sum(C.densify() ** 2, axis=0))
        assert np.allclose(f.E.densify(), U.T @ D.densify())
        for j, (d, e) in enumerate(zip(f.D_cols, f.E_cols)):
            assert e.nnz <= f.k
            assert f.col_sq_norms[j] > 0

    def test_k_row_sparse(self):
        assert C.is_k_row_sparse(f.k)
        assert D.is_k_column_sparse(f.k)

    def test_norms_read_only(self):
        with pytest.raises(ValueError):
            f.col_sq_norms[0] = 1.0

    def test_declared_bound(self):
        with pytest.raises(FactorizationError):
            KSparseFactorization(C, D, declared_k=f.k - 1)

    def test_shape_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            KSparseFactorization(C, random_sparse(9, 4, 2, seed=1))

    def test_setup_work(self):
        assert f.setup_work["gram"] > 0
        assert f.setup_work["columns"] > 0

    def test_with_identity(self):
        augmented = f.with_identity()
        assert augmented.shape == f.shape
        assert augmented.p == f.p + f.m
        assert np.allclose(augmented.densify_product(), f.densify_product())
        assert augmented.k <= f.k + 1


class TestValidate:
    def test_identity(self):
        Q = ColMajorSparseMatrix.identity(4)
        fact = trivial_factorization(Q)
        report = validate(fact, Q, tol=1e-12)
        assert report.passed
        assert report.k == 1

    def test_random(self):
        assert validate(f, f.densify_product())

    def test_zero_row_of_D(self):
        Q = ColMajorSparseMatrix.identity(4)
        fact = trivial_factorization(Q)
        fact.D = ColMajorSparseMatrix.from_dense(np.diag([1.0, 1.0, 0.0, 1.0]))
        report = validate(fact, Q)
        assert not report.passed
        assert report.first_violation.startswith("zero row of D")

    def test_wrong_product(self):
        Q = f.densify_product().copy()
        Q[0, 0] += 1.0
        report = validate(f, Q)
        assert not report
        assert "max norm" in report.first_violation

    def test_shape(self):
        report = validate(f, np.zeros((3, 3)))
        assert report.first_violation.startswith("shape mismatch")

    def test_to_dict(self):
        data = validate(f, f.densify_product()).to_dict()
        assert data["passed"] is True
        assert data["violations"] == []
        assert data["k"] == f.k


class TestExport:
    def test_round_trip(self):
        directory = os.path.join(tmpdirname.name, "export")
        f.to_directory(directory)
        assert sorted(os.listdir(directory)) == ["C.mtx", "D.mtx", "U.mtx", "factorization.json"]
        with open(os.path.join(directory, "factorization.json")) as fh:
            sidecar = json.load(fh)
        assert sidecar["k"] == f.k
        assert (sidecar["m"], sidecar["n"], sidecar["p"]) == (f.m, f.n, f.p)
        loaded = KSparseFactorization.from_directory(directory)
        assert loaded.k == f.k
        assert loaded.C == f.C
        assert loaded.D == f.D

    def test_overwrite(self):
        directory = os.path.join(tmpdirname.name, "overwrite")
        f.to_directory(directory)
        other = trivial_factorization(ColMajorSparseMatrix.identity(3))
        other.to_directory(directory)
        assert KSparseFactorization.from_directory(directory).shape == (3, 3)

    def test_tampered_U(self):
        directory = os.path.join(tmpdirname.name, "tampered")
        f.to_directory(directory)
        write_matrix_market(os.path.join(directory, "U.mtx"), ColMajorSparseMatrix.identity(f.p))
        with pytest.raises(FactorizationError):
            KSparseFactorization.from_directory(directory)
