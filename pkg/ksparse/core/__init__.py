from .work_counter import WorkCounter, work_counter
from .sparse_vector import SparseVector, support, sparse_dense_dot
from .sparse_matrix import ColMajorSparseMatrix
from .dense import DenseVector, as_dense_vector
from .io import (
    read_matrix_market,
    write_matrix_market,
    read_vector,
    write_vector,
    read_edge_list,
    write_edge_list,
)

__all__ = [
    "WorkCounter",
    "work_counter",
    "SparseVector",
    "support",
    "sparse_dense_dot",
    "ColMajorSparseMatrix",
    "DenseVector",
    "as_dense_vector",
    "read_matrix_market",
    "write_matrix_market",
    "read_vector",
    "write_vector",
    "read_edge_list",
    "write_edge_list",
]
