"""Dense vectors are plain 1-D float64 numpy arrays; this module holds the helpers
that enforce that convention.
"""
import numpy as np

from ..errors import DimensionMismatchError

DenseVector = np.ndarray


def as_dense_vector(values, dim=None):
    """Return values as a fresh 1-D float64 array, checking its length against dim when given."""
    x = np.array(values, dtype=np.float64).reshape(-1)
    if dim is not None and x.shape[0] != dim:
        raise DimensionMismatchError("Expected a vector of dim {0}, got {1}".format(dim, x.shape[0]))
    return x
