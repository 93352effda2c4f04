from collections import deque

import numpy as np

from ..common import BaseRecord
from ..errors import DisconnectedGraphError


class SpanningTree(BaseRecord):
    """A rooted spanning tree stored as a parent array.

    The edge joining node c to its parent is indexed by c: weights[c] is its weight and edge_ids[c]
    the index of that edge in the underlying graph. The root (the grounded node) has parent -1.

    Attributes:
        n (int): Number of nodes.
        root (int): The root.
        parent (ndarray): parent[c], -1 for the root.
        weights (ndarray): Weight of the parent edge of every node, 0 for the root.
        edge_ids (ndarray): Graph edge index of the parent edge of every node, -1 for the root.
        strategy (str): How the tree was built.
    """

    _ALLOWED_KEYS = {"n", "root", "parent", "weights", "edge_ids", "strategy", "order"}
    _SCHEMA = "spanning_tree"

    def __init__(self, n, root, parent, weights, edge_ids=None, strategy="given", order=None):
        self.n = int(n)
        self.root = int(root)
        self.parent = np.asarray(parent, dtype=np.int64)
        self.weights = np.asarray(weights, dtype=np.float64)
        self.edge_ids = (
            np.asarray(edge_ids, dtype=np.int64) if edge_ids is not None else np.full(self.n, -1, dtype=np.int64)
        )
        self.strategy = strategy
        self._order = None if order is None else np.asarray(order, dtype=np.int64)
        self._children = None
        self._bfs = None
        self._check()

    def _check(self):
        n = self.n
        if self.parent.shape != (n,) or self.weights.shape != (n,) or self.edge_ids.shape != (n,):
            raise ValueError("parent, weights and edge_ids must all have length n={0}".format(n))
        if not 0 <= self.root < n:
            raise ValueError("Root {0} is outside 0..{1}".format(self.root, n - 1))
        roots = np.flatnonzero(self.parent < 0)
        if roots.tolist() != [self.root]:
            raise ValueError("Exactly the root must have parent -1, found {0}".format(roots.tolist()))
        others = np.arange(n) != self.root
        if np.any(self.parent[others] >= n):
            raise ValueError("Parent index out of range")
        if np.any(~(self.weights[others] > 0)):
            raise ValueError("Tree edge weights must be positive")
        if len(self.bfs_order()) != n:
            raise ValueError("The parent array contains a cycle or does not reach every node from the root")

    @classmethod
    def from_parents(cls, parent, weights, edge_ids=None, strategy="given"):
        parent = np.asarray(parent, dtype=np.int64)
        roots = np.flatnonzero(parent < 0)
        if roots.shape[0] != 1:
            raise ValueError("A parent array needs exactly one root, found {0}".format(roots.shape[0]))
        return cls(parent.shape[0], int(roots[0]), parent, weights, edge_ids, strategy)

    @classmethod
    def from_edges(cls, n, edges, root=0, strategy="given"):
        """Root a set of n-1 edges (u, v, w, edge_id) spanning nodes 0..n-1 at `root`."""
        edges = list(edges)
        if len(edges) != n - 1:
            raise ValueError("A spanning tree on {0} nodes needs {1} edges, got {2}".format(n, n - 1, len(edges)))
        adjacency = [[] for _ in range(n)]
        for u, v, w, edge_id in edges:
            adjacency[u].append((v, w, edge_id))
            adjacency[v].append((u, w, edge_id))
        parent = np.full(n, -2, dtype=np.int64)
        weights = np.zeros(n)
        edge_ids = np.full(n, -1, dtype=np.int64)
        parent[root] = -1
        queue = deque([root])
        while queue:
            node = queue.popleft()
            for other, w, edge_id in sorted(adjacency[node]):
                if parent[other] == -2:
                    parent[other] = node
                    weights[other] = w
                    edge_ids[other] = edge_id
                    queue.append(other)
        if np.any(parent == -2):
            raise DisconnectedGraphError("The tree edges do not connect all {0} nodes".format(n))
        return cls(n, root, parent, weights, edge_ids, strategy)

    def children(self):
        """children()[v] lists the children of v in ascending order."""
        if self._children is None:
            children = [[] for _ in range(self.n)]
            for c in range(self.n):
                if self.parent[c] >= 0:
                    children[int(self.parent[c])].append(c)
            self._children = children
        return self._children

    def bfs_order(self):
        """Nodes in breadth-first order from the root; parents precede children."""
        if self._bfs is None:
            children = self.children()
            order = [self.root]
            i = 0
            while i < len(order):
                order.extend(children[order[i]])
                i += 1
            self._bfs = order
        return self._bfs

    def depths(self):
        depth = np.zeros(self.n, dtype=np.int64)
        for c in self.bfs_order()[1:]:
            depth[c] = depth[self.parent[c]] + 1
        return depth

    def subtree_sizes(self):
        sizes = np.ones(self.n, dtype=np.int64)
        for c in reversed(self.bfs_order()[1:]):
            sizes[self.parent[c]] += sizes[c]
        return sizes

    def edges(self):
        """Tree edges as (parent, child, weight, edge_id), ordered by child."""
        return [
            (int(self.parent[c]), c, float(self.weights[c]), int(self.edge_ids[c]))
            for c in range(self.n)
            if c != self.root
        ]

    def centroid(self):
        """The node whose removal leaves the smallest largest component; lowest index on ties."""
        sizes = self.subtree_sizes()
        best, best_size = None, None
        for v in range(self.n):
            largest = self.n - sizes[v]
            for c in self.children()[v]:
                largest = max(largest, sizes[c])
            if best_size is None or largest < best_size:
                best, best_size = v, largest
        return best

    def reroot(self, root):
        """The same tree rooted at another node."""
        return SpanningTree.from_edges(
            self.n, [(p, c, w, e) for p, c, w, e in self.edges()], root=root, strategy=self.strategy
        )

    @property
    def order(self):
        """The separator ordering of the non-root nodes (see separator_ordering)."""
        if self._order is None:
            from .separator import separator_ordering

            self._order = separator_ordering(self).order if self.n > 1 else np.zeros(0, dtype=np.int64)
        return self._order

    def to_dict(self):
        return {
            "n": self.n,
            "root": self.root,
            "parent": self.parent.tolist(),
            "weights": self.weights.tolist(),
            "edge_ids": self.edge_ids.tolist(),
            "strategy": self.strategy,
            "order": self.order.tolist(),
        }

    def __repr__(self):
        return "<SpanningTree> {0} nodes rooted at {1} ({2})".format(self.n, self.root, self.strategy)
