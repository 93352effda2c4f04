import numpy as np

from ..errors import DimensionMismatchError


class AncestorTable:
    """Binary lifting over a rooted tree: up[j][v] is the 2^j-th ancestor of v (the root maps to itself)."""

    def __init__(self, tree):
        self.depth = tree.depths()
        parent = tree.parent.copy()
        parent[tree.root] = tree.root
        levels = max(1, int(self.depth.max()).bit_length())
        up = [parent]
        for _ in range(1, levels):
            up.append(up[-1][up[-1]])
        self.up = up

    def lca(self, u, v):
        """Lowest common ancestors of the node arrays u and v, elementwise."""
        u = np.array(u, dtype=np.int64)
        v = np.array(v, dtype=np.int64)
        swap = self.depth[u] < self.depth[v]
        u[swap], v[swap] = v[swap], u[swap]
        diff = self.depth[u] - self.depth[v]
        for j, up in enumerate(self.up):
            move = ((diff >> j) & 1).astype(bool)
            u[move] = up[u[move]]
        for up in reversed(self.up):
            differ = up[u] != up[v]
            u[differ] = up[u[differ]]
            v[differ] = up[v[differ]]
        return np.where(u == v, u, self.up[0][u])


def inverse_weight_prefix(tree):
    """prefix[v] = sum of 1/w_e over the tree edges on the path from the root to v."""
    prefix = np.zeros(tree.n)
    for c in tree.bfs_order()[1:]:
        prefix[c] = prefix[tree.parent[c]] + 1.0 / tree.weights[c]
    return prefix


def tree_edge_mask(g, tree):
    """Boolean mask over the edges of g marking the tree edges.

    Raises:
        ValueError: if the tree does not span g or references an edge with other endpoints.
    """
    if tree.n != g.n:
        raise DimensionMismatchError("The tree has {0} nodes, the graph {1}".format(tree.n, g.n))
    mask = np.zeros(g.m, dtype=bool)
    for p, c, w, edge_id in tree.edges():
        if not 0 <= edge_id < g.m:
            raise ValueError("Tree edge of node {0} has no edge id in the graph; the tree does not span it".format(c))
        u, v, weight = g.edges[edge_id]
        if {u, v} != {p, c} or weight != w:
            raise ValueError("Tree edge {0} does not match graph edge ({1}, {2}, {3})".format((p, c, w), u, v, weight))
        if mask[edge_id]:
            raise ValueError("Graph edge {0} is used twice by the tree".format(edge_id))
        mask[edge_id] = True
    return mask


def edge_stretches(g, tree):
    """Stretch w_i * sum over the tree path of 1/w_e for every edge of g (1 for tree edges)."""
    mask = tree_edge_mask(g, tree)
    prefix = inverse_weight_prefix(tree)
    u, v, w = g.sources, g.targets, g.weights
    if g.m == 0:
        return np.zeros(0)
    lca = AncestorTable(tree).lca(u, v)
    stretches = w * (prefix[u] + prefix[v] - 2.0 * prefix[lca])
    stretches[mask] = 1.0
    return stretches


def stretch(g, tree):
    """Total stretch of the non-tree edges of g with respect to the tree under inverse weights.

    This equals ||E^{-1} F||_Frob^2 for the split A = [E F] of the reduced incidence matrix.
    """
    mask = tree_edge_mask(g, tree)
    return float(np.sum(edge_stretches(g, tree)[~mask]))
