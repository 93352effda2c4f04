import math

import networkx as nx
import numpy as np
from networkx.utils import UnionFind

from ..errors import DisconnectedGraphError
from .stretch import tree_edge_mask
from .tree import SpanningTree

STRATEGIES = ("mst-inverse-weight", "akpw-like", "given")
_ALIASES = {"mst": "mst-inverse-weight", "akpw": "akpw-like"}


def _mst_inverse_weight(g):
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(g.n))
    for i, (u, v, w) in enumerate(g.edges):
        graph.add_edge(u, v, key=i, inverse_weight=1.0 / w)
    edges = nx.minimum_spanning_edges(graph, algorithm="kruskal", weight="inverse_weight", keys=True, data=False)
    return sorted(key for _, _, key in edges)


def _kruskal(g, chosen, components):
    for i in sorted(range(g.m), key=lambda i: (1.0 / g.edges[i][2], i)):
        u, v, _ = g.edges[i]
        if components[u] != components[v]:
            components.union(u, v)
            chosen.append(i)
    return chosen


def _akpw_like(g):
    """Cluster-growing heuristic over weight classes.

    Edges are grouped into classes floor(log2(w_max / w)), heaviest first. For each class the
    current components are contracted and clusters are grown by breadth-first search, limited to
    ceil(log2 n) + 1 hops, over the edges of that class and of all heavier classes; the search trees
    become tree edges. A final Kruskal pass by inverse weight joins whatever clusters remain.
    """
    weights = g.weights
    classes = np.floor(np.log2(weights.max() / weights)).astype(np.int64)
    radius = int(math.ceil(math.log2(max(g.n, 2)))) + 1
    components = UnionFind(range(g.n))
    chosen = []
    order = sorted(range(g.m), key=lambda i: (classes[i], -weights[i], i))
    for level in np.unique(classes):
        adjacency = {}
        for i in order:
            if classes[i] > level:
                break
            u, v, _ = g.edges[i]
            a, b = components[u], components[v]
            if a == b:
                continue
            adjacency.setdefault(a, []).append((b, i))
            adjacency.setdefault(b, []).append((a, i))
        visited = set()
        grown = []
        for center in sorted(adjacency):
            if center in visited:
                continue
            visited.add(center)
            queue = [(center, 0)]
            head = 0
            while head < len(queue):
                cluster, hops = queue[head]
                head += 1
                if hops >= radius:
                    continue
                for other, i in adjacency[cluster]:
                    if other not in visited:
                        visited.add(other)
                        grown.append(i)
                        queue.append((other, hops + 1))
        for i in grown:
            u, v, _ = g.edges[i]
            components.union(u, v)
        chosen.extend(grown)
    return sorted(_kruskal(g, chosen, components))


def spanning_tree(g, strategy="mst-inverse-weight", root=None, tree=None):
    """Build a spanning tree of a connected graph.

    Args:
        g (WeightedGraph): The graph.
        strategy (str): "mst-inverse-weight" minimizes the sum of 1/w over the tree edges,
            "akpw-like" grows low-diameter clusters over weight classes, "given" uses `tree`.
            "mst" and "akpw" are accepted as short names.
        root (int or None): The root (grounded node). Default is the centroid of the tree.
        tree (SpanningTree or None): The tree for the "given" strategy.

    Raises:
        DisconnectedGraphError: if g is empty or not connected.
        ValueError: for an unknown strategy or a given tree that does not span g.
    """
    strategy = _ALIASES.get(strategy, strategy)
    if strategy not in STRATEGIES:
        raise ValueError("Invalid tree strategy. Supported strategies are {0}, not {1}".format(STRATEGIES, strategy))
    if not g.connected:
        raise DisconnectedGraphError("The graph with {0} nodes and {1} edges is not connected".format(g.n, g.m))
    if strategy == "given":
        if tree is None:
            raise ValueError("The 'given' strategy needs a tree.")
        tree_edge_mask(g, tree)
        result = SpanningTree(tree.n, tree.root, tree.parent, tree.weights, tree.edge_ids, "given")
    else:
        edge_ids = _mst_inverse_weight(g) if strategy == "mst-inverse-weight" else _akpw_like(g)
        edges = [(g.edges[i][0], g.edges[i][1], g.edges[i][2], i) for i in edge_ids]
        result = SpanningTree.from_edges(g.n, edges, root=0, strategy=strategy)
    if root is None:
        root = result.centroid()
    if root != result.root:
        result = result.reroot(root)
    return result
