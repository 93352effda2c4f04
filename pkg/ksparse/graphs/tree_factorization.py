import numpy as np

from ..core import ColMajorSparseMatrix, work_counter
from ..hmatrix import HBlock, HMatrix, factorize_hmatrix
from .separator import separator_ordering


def reduced_tree_incidence(tree, ordering):
    """The reduced incidence matrix E of the tree under the separator ordering.

    Row i is the node order[i], column i the edge joining order[i] to its parent (oriented from the
    parent to the child): +sqrt(w) on the diagonal and -sqrt(w) in the parent's row unless the parent
    is the root. E is upper triangular.
    """
    size = ordering.order.shape[0]
    rows, cols, values = [], [], []
    for i, c in enumerate(ordering.order):
        root_w = np.sqrt(tree.weights[c])
        rows.append(i)
        cols.append(i)
        values.append(root_w)
        p = tree.parent[c]
        if p != tree.root:
            rows.append(ordering.position[p])
            cols.append(i)
            values.append(-root_w)
    return ColMajorSparseMatrix.from_coo(size, size, rows, cols, values)


class TreeFactorizations:
    """Sparse factorizations of the reduced tree incidence matrix E and of its inverse.

    Attributes:
        E (KSparseFactorization): factorization of E.
        Einv (KSparseFactorization): factorization of E^{-1}.
        E_hmatrix (HMatrix), Einv_hmatrix (HMatrix): the rank-1 hierarchical forms they were built from.
        ordering (TreeOrdering): the separator ordering both are expressed in.
        build_work (int): multiply-adds spent building both factorizations.
    """

    def __init__(self, E, Einv, E_hmatrix, Einv_hmatrix, ordering, build_work):
        self.E = E
        self.Einv = Einv
        self.E_hmatrix = E_hmatrix
        self.Einv_hmatrix = Einv_hmatrix
        self.ordering = ordering
        self.build_work = build_work

    def __getitem__(self, key):
        return {"E_as_H1": self.E, "Einv_as_H1": self.Einv}[key]

    @property
    def k_bound(self):
        """2 (h+1), the bound for binary rank-1 hierarchical matrices of height h."""
        return 2 * (self.ordering.height + 1)


def _subtree_in(node, children, inside):
    nodes = [node]
    i = 0
    while i < len(nodes):
        nodes.extend(c for c in children[nodes[i]] if inside(c))
        i += 1
    return nodes


def _split_blocks(tree, ordering, node):
    """Off-diagonal factors of E and E^{-1} at one split of the ordering.

    With first part A and second part B, every tree edge between the parts joins a head c in B to
    the same parent p in A: the separator's parent when the separator heads B, the separator itself
    otherwise. E[A, B] is therefore -sqrt(w_c) in row p at the heads. E^{-1}[a, c] = 1/sqrt(w_a)
    exactly when a is an ancestor of c or c itself, so E^{-1}[A, B] is 1/sqrt(w) on the ancestor
    chain of p in A times the indicator of the heads' subtrees in B. Both lower blocks are zero.
    """
    first, second = node.children
    position = ordering.position
    order = ordering.order
    children = tree.children()

    def in_first(v):
        return v != tree.root and first.start <= position[v] < first.stop

    def in_second(v):
        return v != tree.root and second.start <= position[v] < second.stop

    heads = [int(c) for c in order[second.start:second.stop] if in_first(tree.parent[c])]
    if not heads:
        return {}, {}
    p = int(tree.parent[heads[0]])
    if any(tree.parent[c] != p for c in heads):
        raise ValueError(
            "The split at [{0}, {1}) is joined through more than one node".format(node.start, node.stop)
        )

    e_left = np.zeros((first.size, 1))
    e_left[position[p] - first.start, 0] = 1.0
    e_right = np.zeros((1, second.size))
    for c in heads:
        e_right[0, position[c] - second.start] = -np.sqrt(tree.weights[c])

    inv_left = np.zeros((first.size, 1))
    a = p
    while in_first(a):
        inv_left[position[a] - first.start, 0] = 1.0 / np.sqrt(tree.weights[a])
        a = tree.parent[a]
    inv_right = np.zeros((1, second.size))
    for c in heads:
        for v in _subtree_in(c, children, in_second):
            inv_right[0, position[v] - second.start] = 1.0
    return {(0, 1): (e_left, e_right)}, {(0, 1): (inv_left, inv_right)}


def tree_hmatrices(tree, ordering=None):
    """The rank-1 HMatrix forms of E and E^{-1} over the dendrogram of the separator ordering."""
    if ordering is None:
        ordering = separator_ordering(tree)

    def build(node):
        if node.is_leaf:
            c = ordering.order[node.start]
            root_w = float(np.sqrt(tree.weights[c]))
            return HBlock(node, value=root_w), HBlock(node, value=1.0 / root_w)
        pairs = [build(child) for child in node.children]
        e_blocks, inv_blocks = _split_blocks(tree, ordering, node)
        return (
            HBlock(node, diagonal=[p[0] for p in pairs], off_diagonal=e_blocks),
            HBlock(node, diagonal=[p[1] for p in pairs], off_diagonal=inv_blocks),
        )

    e_root, inv_root = build(ordering.dendrogram.root)
    return HMatrix(ordering.dendrogram, e_root, 1), HMatrix(ordering.dendrogram, inv_root, 1)


def tree_E_factorizations(tree, ordering=None):
    """Sparse factorizations of the reduced tree incidence matrix and of its inverse.

    Both certify a sparsity index of at most 2 (h+1) where h is the height of the ordering's dendrogram.

    Args:
        tree (SpanningTree): A tree with at least 2 nodes.
        ordering (TreeOrdering or None): A separator ordering of the tree, computed if None.
    Returns:
        factorizations: A TreeFactorizations.
    """
    if ordering is None:
        ordering = separator_ordering(tree)
    with work_counter.measure() as spent:
        E_hmatrix, Einv_hmatrix = tree_hmatrices(tree, ordering)
        E = factorize_hmatrix(E_hmatrix)
        Einv = factorize_hmatrix(Einv_hmatrix)
    return TreeFactorizations(E, Einv, E_hmatrix, Einv_hmatrix, ordering, spent.value)
