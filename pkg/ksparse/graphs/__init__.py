from .graph import WeightedGraph, laplacian
from .incidence import IncidenceMatrix, incidence, reduce
from .tree import SpanningTree
from .separator import SeparatorSplit, TreeOrdering, tree_separator, separator_ordering
from .tree_factorization import TreeFactorizations, reduced_tree_incidence, tree_E_factorizations, tree_hmatrices
from .stretch import AncestorTable, edge_stretches, stretch, tree_edge_mask
from .spanning import STRATEGIES, spanning_tree
from .generators import path_graph, grid_graph, random_tree, random_connected_graph, make_instance

__all__ = [
    "WeightedGraph",
    "laplacian",
    "IncidenceMatrix",
    "incidence",
    "reduce",
    "SpanningTree",
    "SeparatorSplit",
    "TreeOrdering",
    "tree_separator",
    "separator_ordering",
    "TreeFactorizations",
    "reduced_tree_incidence",
    "tree_E_factorizations",
    "tree_hmatrices",
    "AncestorTable",
    "edge_stretches",
    "stretch",
    "tree_edge_mask",
    "STRATEGIES",
    "spanning_tree",
    "path_graph",
    "grid_graph",
    "random_tree",
    "random_connected_graph",
    "make_instance",
]
