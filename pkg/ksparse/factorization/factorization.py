import json
import os
import shutil
import tempfile
from os import path

import numpy as np
import scipy.sparse as sp

from .. import util
from ..core import ColMajorSparseMatrix, work_counter
from ..core.io import read_matrix_market, write_matrix_market
from ..errors import DimensionMismatchError, FactorizationError
from .gram import build_gram_split, precompute_columns
from .overlap import overlap_union_sizes, sparsity_index

DEFAULT_VALIDATION_TOL = 1e-10


class KSparseFactorization:
    """A k-sparse factorization Q = CD together with everything the O(k) update needs.

    On construction the Gram split U (C^T C = U^T + U), the columns e_j = U^T d_j, the squared
    column norms of Q and the certified sparsity index k are computed. The object is treated
    as immutable afterwards.

    Attributes:
        C (ColMajorSparseMatrix): m x p
        D (ColMajorSparseMatrix): p x n
        U (ColMajorSparseMatrix): p x p upper triangular
        E (ColMajorSparseMatrix): p x n, columns e_j
        col_sq_norms (ndarray): ||q_j||^2 for every column of Q
        k (int): the measured sparsity index
        declared_k (int or None): a bound given by the constructor of the factorization
        augmented_rows (int): number of leading identity columns of C whose D rows may be zero
        setup_work (dict): multiply-adds spent on the Gram split and on e_j / norms
    """

    def __init__(self, C, D, declared_k=None, augmented_rows=0):
        """Create a factorization and precompute U, e_j and the column norms.

        Args:
            C (ColMajorSparseMatrix): m x p matrix, no zero columns.
            D (ColMajorSparseMatrix): p x n matrix, no zero rows except within the first
                `augmented_rows` rows.
            declared_k (int or None): If given, the measured sparsity index must not exceed it.
            augmented_rows (int): Leading columns of C that form an identity augmentation.
                Default 0.

        Raises:
            DimensionMismatchError: if C.cols != D.rows
            FactorizationError: for zero C columns, zero D rows, zero columns of Q,
                or a measured index above declared_k.
        """
        if C.cols != D.rows:
            raise DimensionMismatchError(
                "C has {0} columns but D has {1} rows".format(C.cols, D.rows)
            )
        self.C = C
        self.D = D
        self.augmented_rows = int(augmented_rows)
        self.declared_k = declared_k
        self.k = sparsity_index(C, D, augmented_rows=self.augmented_rows)
        if declared_k is not None and self.k > declared_k:
            raise FactorizationError(
                "Measured sparsity index {0} exceeds the declared bound {1}".format(self.k, declared_k)
            )
        with work_counter.measure() as gram_work:
            self.U = build_gram_split(C)
        with work_counter.measure() as column_work:
            self.E, self.col_sq_norms = precompute_columns(C, D, self.U)
        self.col_sq_norms.setflags(write=False)
        self.setup_work = {"gram": gram_work.value, "columns": column_work.value}
        self._Ut = None

    @property
    def m(self):
        return self.C.rows

    @property
    def n(self):
        return self.D.cols

    @property
    def p(self):
        return self.C.cols

    @property
    def shape(self):
        return (self.m, self.n)

    @property
    def frob_sq(self):
        """||Q||_Frob^2, the sum of the squared column norms."""
        return float(self.col_sq_norms.sum())

    @property
    def D_cols(self):
        return self.D.columns

    @property
    def E_cols(self):
        return self.E.columns

    @property
    def Ut(self):
        if self._Ut is None:
            self._Ut = self.U.transpose()
        return self._Ut

    def densify_product(self):
        """Dense C.D, for oracles and validation. Not counted as work."""
        return (self.C.to_scipy() @ self.D.to_scipy()).toarray()

    def product(self):
        """Sparse C.D as a ColMajorSparseMatrix."""
        return ColMajorSparseMatrix.from_scipy(self.C.to_scipy() @ self.D.to_scipy())

    def with_identity(self):
        """The identity-augmented factorization Q = [I_m C] [0; D].

        Any x0 in R^m is then C' h0 with h0 = x0 padded with p zeros. The measured index grows by at most 1.
        """
        m = self.m
        C = sp.hstack([sp.identity(m, format="csc"), self.C.to_scipy()], format="csc")
        D = sp.vstack([sp.csc_matrix((m, self.n)), self.D.to_scipy()], format="csc")
        return KSparseFactorization(
            ColMajorSparseMatrix.from_scipy(C),
            ColMajorSparseMatrix.from_scipy(D),
            declared_k=None if self.declared_k is None else self.declared_k + 1,
            augmented_rows=m,
        )

    def sidecar(self):
        return {"k": self.k, "m": self.m, "n": self.n, "p": self.p, "augmented_rows": self.augmented_rows}

    def to_directory(self, directory):
        """Export as C.mtx, D.mtx, U.mtx and factorization.json.

        The files are written into a temporary sibling directory which then replaces `directory`,
        so a failure leaves no partial export.
        """
        directory = path.abspath(directory)
        parent = path.dirname(directory)
        os.makedirs(parent, exist_ok=True)
        tmp = tempfile.mkdtemp(dir=parent, prefix=".ksparse-")
        try:
            write_matrix_market(path.join(tmp, "C.mtx"), self.C)
            write_matrix_market(path.join(tmp, "D.mtx"), self.D)
            write_matrix_market(path.join(tmp, "U.mtx"), self.U)
            data = self.sidecar()
            util.validate_json(data, "factorization")
            with open(path.join(tmp, "factorization.json"), "w") as f:
                f.write(util.dumps(data))
            if path.isdir(directory):
                shutil.rmtree(directory)
            os.replace(tmp, directory)
        except BaseException:
            shutil.rmtree(tmp, ignore_errors=True)
            raise
        return directory

    @classmethod
    def from_directory(cls, directory, tol=1e-12):
        """Load a factorization exported by to_directory.

        U is recomputed from C and checked against U.mtx; the sidecar's shapes and k are
        checked against the loaded matrices.
        """
        with open(path.join(directory, "factorization.json")) as f:
            sidecar = json.load(f)
        util.validate_json(sidecar, "factorization")
        C = read_matrix_market(path.join(directory, "C.mtx"))
        D = read_matrix_market(path.join(directory, "D.mtx"))
        f = cls(C, D, augmented_rows=sidecar.get("augmented_rows", 0))
        for key in ("k", "m", "n", "p"):
            if sidecar[key] != getattr(f, key):
                raise FactorizationError(
                    "Sidecar {0}={1} does not match the loaded factorization ({2})".format(
                        key, sidecar[key], getattr(f, key)
                    )
                )
        U = read_matrix_market(path.join(directory, "U.mtx"))
        if U.shape != f.U.shape:
            raise FactorizationError("U.mtx has shape {0}, expected {1}".format(U.shape, f.U.shape))
        diff = abs(U.to_scipy() - f.U.to_scipy())
        scale = max(1.0, abs(f.U.to_scipy()).max() if f.U.nnz else 0.0)
        if diff.nnz and diff.max() > tol * scale:
            raise FactorizationError("U.mtx does not match the Gram split of C.mtx")
        return f

    def __repr__(self):
        return "<KSparseFactorization> Q {0}x{1} = C {0}x{2} . D {2}x{1}, k={3}".format(
            self.m, self.n, self.p, self.k
        )


class ValidationReport:
    """The outcome of validate(): whether every check passed, the first violation and the
    list of all violations found.
    """

    def __init__(self, violations, max_error, k):
        self.violations = list(violations)
        self.max_error = max_error
        self.k = k

    @property
    def passed(self):
        return not self.violations

    @property
    def first_violation(self):
        return self.violations[0] if self.violations else None

    def to_dict(self):
        return {
            "passed": self.passed,
            "violations": self.violations,
            "max_error": self.max_error,
            "k": self.k,
        }

    def __bool__(self):
        return self.passed

    def __repr__(self):
        if self.passed:
            return "<ValidationReport> pass (max error {0})".format(self.max_error)
        return "<ValidationReport> fail: {0}".format(self.first_violation)


def validate(f, Q, tol=DEFAULT_VALIDATION_TOL):
    """Check a factorization against Q and against its own structural invariants.

    Failures never raise; they are collected in the returned ValidationReport, first violation first.

    Args:
        f (KSparseFactorization): The factorization to check.
        Q (ColMajorSparseMatrix or ndarray): The matrix it should reproduce.
        tol (float): Relative tolerance in the max norm. Default 1e-10.
    """
    violations = []
    C, D = f.C, f.D
    Qd = Q.densify() if isinstance(Q, ColMajorSparseMatrix) else np.asarray(Q, dtype=np.float64)
    max_error = None
    if C.cols != D.rows or Qd.shape != (C.rows, D.cols):
        violations.append(
            "shape mismatch: C {0}, D {1}, Q {2}".format(C.shape, D.shape, Qd.shape)
        )
        return ValidationReport(violations, max_error, getattr(f, "k", None))

    zero_cols = C.zero_columns()
    if zero_cols.size:
        violations.append("zero column of C: {0}".format(int(zero_cols[0])))
    zero_rows = D.zero_rows()
    zero_rows = zero_rows[zero_rows >= f.augmented_rows]
    if zero_rows.size:
        violations.append("zero row of D: {0}".format(int(zero_rows[0])))

    product = (C.to_scipy() @ D.to_scipy()).toarray()
    max_error = float(np.abs(product - Qd).max()) if Qd.size else 0.0
    scale = float(np.abs(Qd).max()) if Qd.size else 0.0
    if max_error > tol * max(scale, np.finfo(float).tiny):
        violations.append("C.D differs from Q by {0} in max norm".format(max_error))

    U = f.U.to_scipy()
    if sp.tril(U, k=-1).nnz and np.abs(sp.tril(U, k=-1).data).max() > 0:
        violations.append("U is not upper triangular")
    gram = (C.to_scipy().T @ C.to_scipy()).toarray()
    gram_scale = max(float(np.abs(gram).max()) if gram.size else 0.0, np.finfo(float).tiny)
    Ud = U.toarray()
    if Ud.shape != gram.shape or np.abs(Ud + Ud.T - gram).max(initial=0.0) > 1e-12 * gram_scale:
        violations.append("U^T + U does not reconstruct C^T C")
    elif np.abs(np.diag(Ud) - 0.5 * np.diag(gram)).max(initial=0.0) > 1e-12 * gram_scale:
        violations.append("diag(U) is not half the diagonal of C^T C")

    if Ud.shape == gram.shape:
        E = Ud.T @ D.densify()
        if np.abs(E - f.E.densify()).max(initial=0.0) > 1e-12 * max(1.0, float(np.abs(E).max(initial=0.0))):
            violations.append("stored e_j differ from U^T d_j")
        norms = np.sum(product * product, axis=0)
        if np.any(f.col_sq_norms <= 0):
            violations.append("nonpositive squared column norm: {0}".format(int(np.argmax(f.col_sq_norms <= 0))))
        elif np.any(np.abs(f.col_sq_norms - norms) > 1e-10 * np.maximum(norms, np.finfo(float).tiny)):
            violations.append("squared column norms differ from ||C d_j||^2")

    if not zero_cols.size and not zero_rows.size:
        sizes = overlap_union_sizes(C, D)
        measured = int(sizes.max()) if sizes.size else 0
        if measured != f.k:
            violations.append("certified k={0} but the measured sparsity index is {1}".format(f.k, measured))
        if f.declared_k is not None and measured > f.declared_k:
            violations.append("sparsity index {0} exceeds the declared bound {1}".format(measured, f.declared_k))
    return ValidationReport(violations, max_error, f.k)
