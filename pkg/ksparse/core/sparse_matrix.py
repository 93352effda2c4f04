import numpy as np
import scipy.sparse as sp

from ..errors import DimensionMismatchError
from .sparse_vector import SparseVector
from .work_counter import work_counter


def _canonical_csc(matrix):
    csc = sp.csc_matrix(matrix, dtype=np.float64, copy=True)
    csc.sum_duplicates()
    csc.eliminate_zeros()
    csc.sort_indices()
    return csc


class ColMajorSparseMatrix:
    """A column-major sparse matrix whose columns are SparseVectors.

    Storage is a canonical scipy CSC matrix (sorted row indices, no duplicates, no stored
    zeros); the column list is materialized lazily. Instances are treated as immutable.
    """

    def __init__(self, rows, cols, columns=None):
        """Create a matrix from a list of columns.

        Args:
            rows (int): Number of rows.
            cols (int): Number of columns.
            columns (list of SparseVector or None): The columns, each of dim `rows`.
                If None, the matrix is zero.
        """
        if columns is None:
            columns = []
            csc = sp.csc_matrix((rows, cols), dtype=np.float64)
        else:
            if len(columns) != cols:
                raise DimensionMismatchError(
                    "Expected {0} columns, got {1}".format(cols, len(columns))
                )
            indptr = np.zeros(cols + 1, dtype=np.int64)
            for j, column in enumerate(columns):
                if column.dim != rows:
                    raise DimensionMismatchError(
                        "Column {0} has dim {1}, expected {2}".format(j, column.dim, rows)
                    )
                indptr[j + 1] = indptr[j] + column.nnz
            if cols:
                indices = np.concatenate([c.indices for c in columns]) if indptr[-1] else np.zeros(0, np.int64)
                data = np.concatenate([c.values for c in columns]) if indptr[-1] else np.zeros(0)
            else:
                indices = np.zeros(0, np.int64)
                data = np.zeros(0)
            csc = sp.csc_matrix((data, indices, indptr), shape=(rows, cols))
        self.rows = int(rows)
        self.cols = int(cols)
        self._csc = csc
        self._columns = list(columns) if columns else None

    @classmethod
    def from_scipy(cls, matrix):
        csc = _canonical_csc(matrix)
        obj = cls.__new__(cls)
        obj.rows, obj.cols = (int(s) for s in csc.shape)
        obj._csc = csc
        obj._columns = None
        return obj

    @classmethod
    def from_dense(cls, array):
        array = np.atleast_2d(np.asarray(array, dtype=np.float64))
        return cls.from_scipy(sp.csc_matrix(array))

    @classmethod
    def from_coo(cls, rows, cols, row_idx, col_idx, values):
        """Build from coordinates. Duplicate coordinates are an error, not summed."""
        row_idx = np.asarray(row_idx, dtype=np.int64)
        col_idx = np.asarray(col_idx, dtype=np.int64)
        if row_idx.size:
            keys = col_idx * max(rows, 1) + row_idx
            if np.unique(keys).size != keys.size:
                raise ValueError("Duplicate coordinates in sparse matrix input.")
        return cls.from_scipy(sp.coo_matrix((values, (row_idx, col_idx)), shape=(rows, cols)))

    @classmethod
    def identity(cls, n):
        return cls.from_scipy(sp.identity(n, format="csc"))

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols)

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def nnz(self):
        return int(self._csc.nnz)

    @property
    def columns(self):
        if self._columns is None:
            csc = self._csc
            self._columns = [
                SparseVector(
                    self.rows,
                    csc.indices[csc.indptr[j]:csc.indptr[j + 1]],
                    csc.data[csc.indptr[j]:csc.indptr[j + 1]],
                )
                for j in range(self.cols)
            ]
        return self._columns

    def column(self, j):
        if self._columns is not None:
            return self._columns[j]
        csc = self._csc
        start, end = csc.indptr[j], csc.indptr[j + 1]
        return SparseVector(self.rows, csc.indices[start:end], csc.data[start:end])

    def to_scipy(self):
        """The underlying canonical CSC matrix. Callers must not modify it."""
        return self._csc

    def densify(self):
        return self._csc.toarray()

    def transpose(self):
        return ColMajorSparseMatrix.from_scipy(self._csc.T)

    @property
    def T(self):
        return self.transpose()

    def column_support_sizes(self):
        return np.diff(self._csc.indptr).astype(np.int64)

    def row_support_sizes(self):
        return np.bincount(self._csc.indices, minlength=self.rows).astype(np.int64)

    def max_column_support(self):
        return int(self.column_support_sizes().max()) if self.cols else 0

    def max_row_support(self):
        return int(self.row_support_sizes().max()) if self.rows else 0

    def is_k_column_sparse(self, k):
        return self.max_column_support() <= k

    def is_k_row_sparse(self, k):
        return self.max_row_support() <= k

    def zero_columns(self):
        return np.flatnonzero(self.column_support_sizes() == 0)

    def zero_rows(self):
        return np.flatnonzero(self.row_support_sizes() == 0)

    def select_columns(self, idx):
        return ColMajorSparseMatrix.from_scipy(self._csc[:, np.asarray(idx, dtype=np.int64)])

    def select_rows(self, idx):
        return ColMajorSparseMatrix.from_scipy(self._csc[np.asarray(idx, dtype=np.int64), :])

    def matvec(self, x):
        """Dense product self @ x. Counts one multiply-add per stored entry in the columns
        selected by the nonzeros of x.
        """
        x = np.asarray(x, dtype=np.float64)
        if x.ndim != 1 or x.shape[0] != self.cols:
            raise DimensionMismatchError(
                "Cannot multiply a {0} matrix with a vector of shape {1}".format(self.shape, x.shape)
            )
        active = np.flatnonzero(x)
        work_counter.add(int(self.column_support_sizes()[active].sum()))
        return self._csc @ x

    def rmatvec(self, x):
        """Dense product self.T @ x, one multiply-add per stored entry."""
        x = np.asarray(x, dtype=np.float64)
        if x.ndim != 1 or x.shape[0] != self.rows:
            raise DimensionMismatchError(
                "Cannot multiply the transpose of a {0} matrix with a vector of shape {1}".format(self.shape, x.shape)
            )
        work_counter.add(self.nnz)
        return self._csc.T @ x

    def matmul(self, other):
        """Sparse product self @ other. For every stored entry (i, j) of other, column i of self
        is scaled and accumulated, which is what the work counter records.
        """
        if self.cols != other.rows:
            raise DimensionMismatchError(
                "Cannot multiply {0} by {1}".format(self.shape, other.shape)
            )
        other_csc = other.to_scipy()
        work_counter.add(int(self.column_support_sizes()[other_csc.indices].sum()))
        return ColMajorSparseMatrix.from_scipy(self._csc @ other_csc)

    def __eq__(self, other):
        if not isinstance(other, ColMajorSparseMatrix):
            return NotImplemented
        a, b = self._csc, other._csc
        return (
            self.shape == other.shape
            and np.array_equal(a.indptr, b.indptr)
            and np.array_equal(a.indices, b.indices)
            and np.array_equal(a.data, b.data)
        )

    __hash__ = None

    def __repr__(self):
        return "<ColMajorSparseMatrix> {0}x{1} with {2} stored entries".format(self.rows, self.cols, self.nnz)
