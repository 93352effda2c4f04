"""Instance families for tests and benchmarks. Every generator is deterministic given its seed."""
import networkx as nx
import numpy as np

from .graph import WeightedGraph

DEFAULT_WEIGHT_RANGE = (0.1, 10.0)


def _weights(rng, count, weight_range):
    if weight_range is None:
        return np.ones(count)
    low, high = weight_range
    return rng.uniform(low, high, size=count)


def _from_networkx(graph, seed, weight_range):
    graph = nx.convert_node_labels_to_integers(graph, ordering="sorted")
    edges = sorted((min(u, v), max(u, v)) for u, v in graph.edges())
    weights = _weights(np.random.default_rng(seed), len(edges), weight_range)
    return WeightedGraph(graph.number_of_nodes(), [(u, v, w) for (u, v), w in zip(edges, weights)])


def path_graph(n, seed=0, weight_range=None):
    """Path 0 - 1 - ... - n-1, unit weights unless a weight range is given."""
    return _from_networkx(nx.path_graph(n), seed, weight_range)


def grid_graph(rows, cols=None, seed=0, weight_range=None):
    """rows x cols grid, nodes numbered row by row."""
    return _from_networkx(nx.grid_2d_graph(rows, cols if cols is not None else rows), seed, weight_range)


def random_tree(n, seed=0, weight_range=DEFAULT_WEIGHT_RANGE):
    """Uniformly random labelled tree on n nodes, from a random Pruefer sequence."""
    if n < 1:
        raise ValueError("n must be >= 1, not {0}".format(n))
    if n == 1:
        return WeightedGraph(1)
    if n == 2:
        return WeightedGraph(2, [(0, 1, _weights(np.random.default_rng(seed), 1, weight_range)[0])])
    rng = np.random.default_rng(seed)
    sequence = rng.integers(0, n, size=n - 2).tolist()
    return _from_networkx(nx.from_prufer_sequence(sequence), seed + 1, weight_range)


def random_connected_graph(n, m=None, seed=0, weight_range=DEFAULT_WEIGHT_RANGE):
    """A random tree on n nodes plus m - (n-1) extra edges between distinct random node pairs.
    Parallel edges can occur. m defaults to 2n.
    """
    if m is None:
        m = 2 * n
    if m < n - 1:
        raise ValueError("A connected graph on {0} nodes needs at least {1} edges".format(n, n - 1))
    tree = random_tree(n, seed, weight_range)
    rng = np.random.default_rng(seed + 2)
    edges = list(tree.edges)
    extra = m - len(edges)
    if extra and n < 2:
        raise ValueError("Cannot add edges to a graph with {0} node".format(n))
    u = rng.integers(0, n, size=extra)
    v = (u + rng.integers(1, n, size=extra)) % n if extra else u
    weights = _weights(rng, extra, weight_range)
    edges.extend((int(a), int(b), float(w)) for a, b, w in zip(u, v, weights))
    return WeightedGraph(n, edges)


FAMILIES = {
    "path": lambda n, seed: path_graph(n, seed),
    "grid": lambda n, seed: grid_graph(max(1, int(round(np.sqrt(n)))), seed=seed),
    "random-tree": lambda n, seed: random_tree(n, seed),
    "random-graph": lambda n, seed: random_connected_graph(n, 2 * n, seed),
}


def make_instance(family, n, seed=0):
    """Build the instance of a benchmark family with (about) n nodes."""
    if family not in FAMILIES:
        raise ValueError("Invalid family. Supported families are {0}, not {1}".format(sorted(FAMILIES), family))
    return FAMILIES[family](n, seed)
