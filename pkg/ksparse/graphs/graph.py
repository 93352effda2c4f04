import networkx as nx
import numpy as np
import scipy.sparse as sp


class WeightedGraph:
    """An undirected graph on nodes 0..n-1 with positively weighted edges.

    Parallel edges are allowed; self loops are not. Edge i is edges[i] = (u, v, w).
    """

    def __init__(self, n, edges=()):
        """Create a WeightedGraph.

        Args:
            n (int): Number of nodes.
            edges (iterable of (int, int, float)): 0-based endpoints and weight.

        Raises:
            ValueError: for self loops, endpoints out of range and nonpositive weights.
        """
        if n < 0:
            raise ValueError("n must be >= 0, not {0}".format(n))
        self.n = int(n)
        checked = []
        for i, (u, v, w) in enumerate(edges):
            u, v, w = int(u), int(v), float(w)
            if u == v:
                raise ValueError("Edge {0} is a self loop on node {1}".format(i, u))
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError("Edge {0} = ({1}, {2}) has an endpoint outside 0..{3}".format(i, u, v, n - 1))
            if not w > 0 or not np.isfinite(w):
                raise ValueError("Edge {0} has weight {1}; weights must be positive".format(i, w))
            checked.append((u, v, w))
        self.edges = checked
        self._connected = None

    @property
    def m(self):
        return len(self.edges)

    @property
    def sources(self):
        return np.array([u for u, _, _ in self.edges], dtype=np.int64)

    @property
    def targets(self):
        return np.array([v for _, v, _ in self.edges], dtype=np.int64)

    @property
    def weights(self):
        return np.array([w for _, _, w in self.edges], dtype=np.float64)

    def to_networkx(self):
        """A networkx MultiGraph whose edge keys are the edge indices and whose data holds `w`."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.n))
        for i, (u, v, w) in enumerate(self.edges):
            graph.add_edge(u, v, key=i, w=w, id=i)
        return graph

    @property
    def connected(self):
        if self._connected is None:
            self._connected = self.n > 0 and nx.is_connected(self.to_networkx())
        return self._connected

    def is_tree(self):
        return self.connected and self.m == self.n - 1

    def __repr__(self):
        return "<WeightedGraph> {0} nodes, {1} edges".format(self.n, self.m)


def laplacian(g):
    """L = B B^T as a scipy CSR matrix: weighted degrees on the diagonal, -w_uv off it."""
    if g.m == 0:
        return sp.csr_matrix((g.n, g.n))
    u, v, w = g.sources, g.targets, g.weights
    rows = np.concatenate([u, v, u, v])
    cols = np.concatenate([v, u, u, v])
    data = np.concatenate([-w, -w, w, w])
    return sp.coo_matrix((data, (rows, cols)), shape=(g.n, g.n)).tocsr()
