"""Separator-based ordering of the non-root nodes of a rooted tree.

Every piece produced by the recursion is path-convex: with an ancestor and a descendant it also
holds every node between them. A split only moves whole subtrees and whole components of the piece
into its second part, so parents always precede their children in the final ordering and the
reduced incidence matrix of the tree is upper triangular under it.
"""
import numpy as np

from ..hmatrix import Dendrogram, DendrogramNode


class SeparatorSplit:
    """The result of tree_separator.

    Attributes:
        separator (int or None): The separator node, None when the piece was split along its components.
        first (list): The first part, in ascending node order.
        second (list): The second part, in ascending node order. Both parts hold at most ceil(2n/3) nodes.
    """

    def __init__(self, separator, first, second):
        self.separator = separator
        self.first = first
        self.second = second

    @property
    def separator_in_second(self):
        """Whether the separator heads the second part. The edge from the separator to its parent is then the
        only tree edge between the two parts.
        """
        return self.separator is not None and self.separator in self.second

    def __repr__(self):
        return "<SeparatorSplit> separator={0}, parts of size {1} and {2}".format(
            self.separator, len(self.first), len(self.second)
        )


def _collect(start, children_in):
    nodes = [start]
    i = 0
    while i < len(nodes):
        nodes.extend(children_in[nodes[i]])
        i += 1
    return nodes


def _balance(items, first_load, second_load):
    """Assign (size, top) items, largest first, to whichever part is lighter (the second on ties).

    Returns:
        (to_second, first_load, second_load): the tops sent to the second part and the final loads.
    """
    to_second = []
    for size, top in sorted(items, key=lambda item: (-item[0], item[1])):
        if second_load <= first_load:
            to_second.append(top)
            second_load += size
        else:
            first_load += size
    return to_second, first_load, second_load


def _split(separator, nodes, second_set):
    first = [v for v in nodes if v not in second_set]
    second = [v for v in nodes if v in second_set]
    return SeparatorSplit(separator, first, second)


def tree_separator(tree, nodes):
    """Split the forest induced by `nodes` into two parts of at most ceil(2n/3) nodes each.

    If no component holds more than half of the piece, whole components are split without a
    separator. Otherwise the separator d comes from the largest component and is placed in one of
    two ways, the first one that balances winning:

    1. d heads the second part together with its whole subtree in the piece. Only the edge from d to
       its parent then joins the parts.
    2. d closes the first part behind its ancestors, and its child subtrees are spread over both parts.
       Every edge between the parts then leaves d. Below the center of a star no subtree fits, so
       only this placement balances there.

    For each placement the lowest-index valid node is taken. The other components go, largest first,
    to the lighter part.

    Args:
        tree (SpanningTree): The rooted tree the piece belongs to.
        nodes (iterable of int): The piece, at least 2 nodes.
    Returns:
        split: A SeparatorSplit.
    """
    nodes = sorted(int(v) for v in nodes)
    size = len(nodes)
    if size < 2:
        raise ValueError("A separator needs a piece of at least 2 nodes, got {0}".format(size))
    in_piece = set(nodes)
    children = tree.children()
    children_in = {v: [c for c in children[v] if c in in_piece] for v in nodes}
    tops = [v for v in nodes if int(tree.parent[v]) not in in_piece]
    components = {top: _collect(top, children_in) for top in tops}
    largest_top = min(tops, key=lambda top: (-len(components[top]), top))

    if 2 * len(components[largest_top]) <= size:
        to_second, _, _ = _balance([(len(components[top]), top) for top in tops], 0, 0)
        second_set = set()
        for top in to_second:
            second_set.update(components[top])
        return _split(None, nodes, second_set)

    limit = -(-2 * size // 3)
    largest = components[largest_top]
    total = len(largest)
    subtree = {}
    for v in reversed(largest):
        subtree[v] = 1 + sum(subtree[c] for c in children_in[v])
    others = [(len(components[top]), top) for top in tops if top != largest_top]
    candidates = sorted(largest)

    for d in candidates:
        s = subtree[d]
        if d == largest_top or s > limit or total - s > limit:
            continue
        to_second, first_load, second_load = _balance(others, total - s, s)
        if first_load <= limit and second_load <= limit:
            second_set = set(_collect(d, children_in))
            for top in to_second:
                second_set.update(components[top])
            return _split(d, nodes, second_set)

    for d in candidates:
        items = [(subtree[c], c) for c in children_in[d]] + others
        to_second, first_load, second_load = _balance(items, total - subtree[d] + 1, 0)
        if first_load <= limit and 0 < second_load <= limit:
            second_set = set()
            for top in to_second:
                second_set.update(components[top] if top in components else _collect(top, children_in))
            return _split(d, nodes, second_set)
    raise ValueError("No balanced separator for a piece of {0} nodes".format(size))


class TreeOrdering:
    """The separator ordering of the non-root nodes of a tree.

    Attributes:
        order (ndarray): order[i] is the node at position i.
        position (ndarray): position[v] is the position of node v, -1 for the root.
        dendrogram (Dendrogram): Binary dendrogram over the positions.
        separators (dict): (start, stop) of every internal dendrogram node -> its separator or None.
    """

    def __init__(self, order, position, dendrogram, separators):
        self.order = order
        self.position = position
        self.dendrogram = dendrogram
        self.separators = separators

    @property
    def height(self):
        return self.dendrogram.height

    def __repr__(self):
        return "<TreeOrdering> {0} nodes, height {1}".format(len(self.order), self.height)


def separator_ordering(tree):
    """Order the non-root nodes of a tree by recursive separator splits.

    Each split orders its first part before its second part. Parents precede children, so the
    reduced incidence matrix of the tree is upper triangular under this ordering.
    The dendrogram height is at most ceil(log_{3/2} n) + 1.

    Args:
        tree (SpanningTree): A tree with at least 2 nodes.
    Returns:
        ordering: A TreeOrdering.
    """
    if tree.n < 2:
        raise ValueError("A separator ordering needs a tree with at least 2 nodes.")
    order = []
    separators = {}

    def build(piece, start):
        if len(piece) == 1:
            order.append(piece[0])
            return DendrogramNode(start, start + 1)
        split = tree_separator(tree, piece)
        left = build(split.first, start)
        right = build(split.second, left.stop)
        node = DendrogramNode(start, right.stop, [left, right])
        separators[(node.start, node.stop)] = split.separator
        return node

    piece = [v for v in range(tree.n) if v != tree.root]
    root = build(piece, 0)
    order = np.array(order, dtype=np.int64)
    position = np.full(tree.n, -1, dtype=np.int64)
    position[order] = np.arange(order.shape[0])
    return TreeOrdering(order, position, Dendrogram(root), separators)
