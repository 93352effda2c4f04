import numpy as np

from ..errors import DimensionMismatchError
from .work_counter import work_counter


class SparseVector:
    """An immutable index-value vector. Indices are 0-based, strictly increasing,
    and exact zeros are never stored.
    """

    __slots__ = ("dim", "indices", "values")

    def __init__(self, dim, indices=(), values=()):
        """Create a SparseVector.

        Args:
            dim (int): The dimension of the vector.
            indices (iterable of int): Positions of the entries. They are sorted on construction;
                duplicates are rejected.
            values (iterable of float): Entry values aligned with indices. Exact zeros are dropped.
        """
        if dim < 0:
            raise ValueError("dim must be >= 0, not {0}".format(dim))
        indices = np.asarray(indices, dtype=np.int64).reshape(-1)
        values = np.asarray(values, dtype=np.float64).reshape(-1)
        if indices.shape != values.shape:
            raise ValueError("indices and values must have the same length.")
        if indices.size:
            order = np.argsort(indices, kind="stable")
            indices = indices[order]
            values = values[order]
            if indices[0] < 0 or indices[-1] >= dim:
                raise IndexError("SparseVector index out of range for dim {0}".format(dim))
            if np.any(indices[1:] == indices[:-1]):
                raise ValueError("SparseVector indices must be unique.")
            keep = values != 0.0
            if not keep.all():
                indices = indices[keep]
                values = values[keep]
        indices.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, "dim", int(dim))
        object.__setattr__(self, "indices", indices)
        object.__setattr__(self, "values", values)

    def __setattr__(self, key, value):
        raise AttributeError("SparseVector is immutable.")

    @classmethod
    def from_dense(cls, x):
        x = np.asarray(x, dtype=np.float64).reshape(-1)
        idx = np.flatnonzero(x)
        return cls(x.shape[0], idx, x[idx])

    @classmethod
    def from_pairs(cls, dim, pairs):
        pairs = list(pairs)
        if not pairs:
            return cls(dim)
        indices, values = zip(*pairs)
        return cls(dim, indices, values)

    @classmethod
    def unit(cls, dim, i, value=1.0):
        return cls(dim, [i], [value])

    @property
    def nnz(self):
        return int(self.indices.shape[0])

    def support(self):
        return frozenset(int(i) for i in self.indices)

    def to_dense(self):
        x = np.zeros(self.dim)
        x[self.indices] = self.values
        return x

    def pairs(self):
        return list(zip(self.indices.tolist(), self.values.tolist()))

    def scaled(self, alpha):
        return SparseVector(self.dim, self.indices, self.values * alpha)

    def __eq__(self, other):
        if not isinstance(other, SparseVector):
            return NotImplemented
        return (
            self.dim == other.dim
            and np.array_equal(self.indices, other.indices)
            and np.array_equal(self.values, other.values)
        )

    def __hash__(self):
        return hash((self.dim, self.indices.tobytes(), self.values.tobytes()))

    def __len__(self):
        return self.dim

    def __repr__(self):
        return "SparseVector(dim={0}, entries={1})".format(self.dim, self.pairs())


def support(v):
    """Return the set of indices of the nonzero entries of v."""
    return v.support()


def sparse_dense_dot(v, x):
    """Inner product of a SparseVector with a dense vector.
    Performs exactly nnz(v) multiply-adds, which are added to the work counter.
    """
    x = np.asarray(x)
    if x.ndim != 1 or x.shape[0] != v.dim:
        raise DimensionMismatchError(
            "Cannot take the inner product of a vector of dim {0} with one of shape {1}".format(v.dim, x.shape)
        )
    work_counter.add(v.nnz)
    if v.nnz == 0:
        return 0.0
    return float(np.dot(v.values, x[v.indices]))
