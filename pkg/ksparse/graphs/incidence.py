import numpy as np

from ..core import ColMajorSparseMatrix


class IncidenceMatrix:
    """The n x m weighted incidence matrix of a graph: column i has -sqrt(w_i) at its source and
    +sqrt(w_i) at its target.

    Attributes:
        matrix (ColMajorSparseMatrix): The n x m matrix B.
        sources (ndarray): Source node of every column.
        targets (ndarray): Target node of every column.
    """

    def __init__(self, n, sources, targets, weights):
        self.n = int(n)
        self.sources = np.asarray(sources, dtype=np.int64)
        self.targets = np.asarray(targets, dtype=np.int64)
        self.weights = np.asarray(weights, dtype=np.float64)
        m = self.sources.shape[0]
        root_w = np.sqrt(self.weights)
        rows = np.concatenate([self.sources, self.targets])
        cols = np.concatenate([np.arange(m), np.arange(m)])
        values = np.concatenate([-root_w, root_w])
        self.matrix = ColMajorSparseMatrix.from_coo(self.n, m, rows, cols, values)

    @property
    def m(self):
        return self.sources.shape[0]

    def orientation(self):
        return list(zip(self.sources.tolist(), self.targets.tolist()))

    def densify(self):
        return self.matrix.densify()


def incidence(g, orientation_seed=None):
    """Build the incidence matrix of g.

    Args:
        g (WeightedGraph): The graph.
        orientation_seed (int or None): If None every edge goes from its smaller to its larger node id.
            Otherwise each edge is flipped with probability 1/2 by a seeded generator.
    """
    u, v = g.sources, g.targets
    sources = np.minimum(u, v)
    targets = np.maximum(u, v)
    if orientation_seed is not None:
        flip = np.random.default_rng(orientation_seed).random(g.m) < 0.5
        sources, targets = np.where(flip, targets, sources), np.where(flip, sources, targets)
    return IncidenceMatrix(g.n, sources, targets, g.weights)


def reduce(B, grounded):
    """Delete the grounded node's row. For a connected graph the result has full row rank."""
    matrix = B.matrix if isinstance(B, IncidenceMatrix) else B
    if not 0 <= grounded < matrix.rows:
        raise ValueError("Grounded node {0} is outside 0..{1}".format(grounded, matrix.rows - 1))
    keep = np.array([i for i in range(matrix.rows) if i != grounded], dtype=np.int64)
    return matrix.select_rows(keep)
