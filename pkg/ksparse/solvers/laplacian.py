import math

import numpy as np

from ..errors import DisconnectedGraphError, IncompatibleSystemError
from ..graphs import spanning_tree
from .min_norm import solve_min_norm
from .split import SplitSystem

ZERO_SUM_TOL = 1e-12


def l_pseudo_norm(g, chi, squared=True):
    """chi^T L chi = sum over edges of w_uv (chi_u - chi_v)^2, or its square root if squared=False.

    It vanishes exactly on vectors that are constant on every connected component.
    """
    chi = np.asarray(chi, dtype=np.float64)
    if g.m == 0:
        return 0.0
    diff = chi[g.sources] - chi[g.targets]
    value = float(np.sum(g.weights * diff * diff))
    return value if squared else math.sqrt(value)


class LaplacianSystem:
    """L chi = c with L = B B^T the Laplacian of a connected graph and c summing to zero.

    Raises:
        DisconnectedGraphError: if the graph is not connected or has no edges.
        IncompatibleSystemError: if c does not sum to zero within 1e-12 ||c||.
    """

    def __init__(self, graph, c, grounded=None):
        c = np.asarray(c, dtype=np.float64).reshape(-1)
        if graph.m == 0 or not graph.connected:
            raise DisconnectedGraphError(
                "The graph with {0} nodes and {1} edges is not connected".format(graph.n, graph.m)
            )
        if c.shape[0] != graph.n:
            raise ValueError("c has length {0}, the graph has {1} nodes".format(c.shape[0], graph.n))
        total = float(np.sum(c))
        if abs(total) > ZERO_SUM_TOL * max(float(np.linalg.norm(c)), 1.0):
            raise IncompatibleSystemError("c must sum to zero, its sum is {0}".format(total))
        self.graph = graph
        self.c = c
        self.grounded = grounded

    def __repr__(self):
        return "<LaplacianSystem> {0} nodes, {1} edges".format(self.graph.n, self.graph.m)


def back_substitute(tree, x_tree):
    """Solve E^T chi = x_E along the tree, from the root down.

    chi_root = 0 and chi_c = chi_parent + x_c / sqrt(w_c), where x_c is the value on the edge joining c
    to its parent. This takes O(n) operations.

    Args:
        tree (SpanningTree): The tree.
        x_tree (ndarray): Length n, x_tree[c] is the flow on the parent edge of c (ignored for the root).
    """
    chi = np.zeros(tree.n)
    for c in tree.bfs_order()[1:]:
        chi[c] = chi[tree.parent[c]] + x_tree[c] / math.sqrt(tree.weights[c])
    return chi


def edge_values_to_tree(tree, x):
    """Pick out, per node, the value of x (in graph edge order) on its parent edge."""
    x_tree = np.zeros(tree.n)
    others = np.arange(tree.n) != tree.root
    x_tree[others] = np.asarray(x)[tree.edge_ids[others]]
    return x_tree


def solve_laplacian(system, eps=1e-6, seed=0, tree_strategy="mst-inverse-weight", tree=None, oracle=None,
                    max_iters=None, trace_stride=None, debug=False):
    """Solve L chi = c in two steps.

    First the minimum-norm solution x of B x = c is approximated: the grounded row is removed, the
    reduced incidence matrix is split on a spanning tree, and solve_min_norm runs with the inner
    accuracy delta = eps / sqrt(stretch + max(m, n)). Then E^T chi = x_E is solved by back
    substitution along the tree, so chi is zero at the grounded node.

    Args:
        system (LaplacianSystem): The graph and right-hand side.
        eps (float): Target relative accuracy in the L-pseudo-norm.
        seed (int): Sampling seed.
        tree_strategy (str): Spanning tree strategy, see spanning_tree.
        tree (SpanningTree or None): The tree for the "given" strategy.
        oracle (array-like or None): chi*, the exact solution. When given, the report records the
            L-pseudo-norm error and error_transfer checkpoints (t, ||x_t - x*||^2, ||chi_t - chi*||_L^2).
        max_iters (int or None): Overrides the predicted budget of the inner solve.

    Returns:
        (chi, report)
    """
    g = system.graph
    if tree is not None:
        spanning = spanning_tree(g, "given", root=system.grounded, tree=tree)
    else:
        spanning = spanning_tree(g, tree_strategy, root=system.grounded)
    split = SplitSystem.from_graph(g, tree=spanning)
    stretch = split.stretch
    delta = eps / math.sqrt(stretch + max(g.m, g.n))
    b = split.reduce_rhs(system.c)

    transfer = None
    observer = None
    oracle_x = None
    if oracle is not None:
        chi_star = np.asarray(oracle, dtype=np.float64)
        chi_star = chi_star - chi_star[spanning.root]
        u, v, w = g.sources, g.targets, g.weights
        sources = np.minimum(u, v)
        targets = np.maximum(u, v)
        oracle_x = np.sqrt(w) * (chi_star[targets] - chi_star[sources])
        tree_edges = spanning.edge_ids[np.arange(g.n) != spanning.root]
        children = np.flatnonzero(np.arange(g.n) != spanning.root)
        oracle_x[tree_edges] = np.sqrt(spanning.weights[children]) * (
            chi_star[children] - chi_star[spanning.parent[children]]
        )
        transfer = []

        def observer(t, x):
            chi_t = back_substitute(spanning, edge_values_to_tree(spanning, x))
            dx = float(np.sum((x - oracle_x) ** 2))
            transfer.append([t, dx, l_pseudo_norm(g, chi_t - chi_star)])

    x, report = solve_min_norm(
        split,
        b,
        eps=delta,
        seed=seed,
        max_iters=max_iters,
        oracle=oracle_x,
        observer=observer,
        trace_stride=trace_stride,
        debug=debug,
    )
    chi = back_substitute(spanning, edge_values_to_tree(spanning, x))
    l_error = None
    if oracle is not None:
        denominator = l_pseudo_norm(g, chi_star, squared=False)
        difference = l_pseudo_norm(g, chi - chi_star, squared=False)
        l_error = difference / denominator if denominator > 0 else difference
    report.update(
        solver="laplacian",
        stretch=stretch,
        tree_strategy=spanning.strategy,
        grounded=int(spanning.root),
        inner_eps=delta,
        l_error=l_error,
        error_transfer=transfer,
    )
    return chi, report
