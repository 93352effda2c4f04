from .. import util


class DendrogramNode:
    """A node of a dendrogram: the contiguous index interval [start, stop) and its children."""

    def __init__(self, start, stop, children=None):
        self.start = int(start)
        self.stop = int(stop)
        self.children = list(children) if children else []

    @property
    def size(self):
        return self.stop - self.start

    @property
    def is_leaf(self):
        return not self.children

    @property
    def height(self):
        if self.is_leaf:
            return 0
        return 1 + max(child.height for child in self.children)

    def iter_nodes(self):
        yield self
        for child in self.children:
            yield from child.iter_nodes()

    def shifted(self, offset):
        return DendrogramNode(self.start + offset, self.stop + offset, [c.shifted(offset) for c in self.children])

    def to_list(self):
        return [self.start, self.stop, [child.to_list() for child in self.children]]

    @classmethod
    def from_list(cls, data):
        start, stop, children = data
        return cls(start, stop, [cls.from_list(child) for child in children])

    def __repr__(self):
        return "<DendrogramNode> [{0}, {1}) with {2} children".format(self.start, self.stop, len(self.children))


class Dendrogram:
    """A hierarchical partition of {0, ..., n-1} into nested contiguous intervals.

    The root is [0, n), the children of every node partition its interval in order, and the
    leaves are singletons.
    """

    def __init__(self, root):
        self.root = root
        self.n = root.stop
        self.validate()

    @property
    def height(self):
        return self.root.height

    @property
    def degree(self):
        """Maximum number of children of a node, at least 2."""
        return max([2] + [len(node.children) for node in self.root.iter_nodes()])

    def nodes(self):
        return list(self.root.iter_nodes())

    def leaves(self):
        return [node for node in self.root.iter_nodes() if node.is_leaf]

    def validate(self):
        if self.root.start != 0:
            raise ValueError("The root of a dendrogram must start at 0, not {0}".format(self.root.start))
        if self.n < 1:
            raise ValueError("A dendrogram needs at least one index.")
        for node in self.root.iter_nodes():
            if node.is_leaf:
                if node.size != 1:
                    raise ValueError("Leaf [{0}, {1}) is not a singleton".format(node.start, node.stop))
                continue
            if len(node.children) < 2:
                raise ValueError("Node [{0}, {1}) has a single child".format(node.start, node.stop))
            position = node.start
            for child in node.children:
                if child.start != position or child.stop <= child.start:
                    raise ValueError(
                        "Children of [{0}, {1}) are not contiguous and ordered".format(node.start, node.stop)
                    )
                position = child.stop
            if position != node.stop:
                raise ValueError("Children of [{0}, {1}) do not cover it".format(node.start, node.stop))

    def subdendrogram(self, node):
        """The dendrogram of the block at `node`, re-based to start at 0."""
        return Dendrogram(node.shifted(-node.start))

    def to_dict(self):
        return {"n": self.n, "root": self.root.to_list()}

    @classmethod
    def from_dict(cls, data):
        util.validate_json(data, "dendrogram")
        dendrogram = cls(DendrogramNode.from_list(data["root"]))
        if dendrogram.n != data["n"]:
            raise ValueError("Dendrogram root covers {0} indices, n is {1}".format(dendrogram.n, data["n"]))
        return dendrogram

    def to_json(self, filepath=None):
        text = util.dumps(self.to_dict())
        if filepath is not None:
            util.write_atomic(filepath, text)
        return text

    @classmethod
    def from_json(cls, filepath):
        import json

        with open(filepath) as f:
            return cls.from_dict(json.load(f))

    def __repr__(self):
        return "<Dendrogram> n={0}, height={1}, degree={2}".format(self.n, self.height, self.degree)


def _split_evenly(start, stop, d):
    size = stop - start
    t = min(d, size)
    base, extra = divmod(size, t)
    bounds = [start]
    for i in range(t):
        bounds.append(bounds[-1] + base + (1 if i < extra else 0))
    return list(zip(bounds[:-1], bounds[1:]))


def _build(start, stop, split):
    if stop - start == 1:
        return DendrogramNode(start, stop)
    return DendrogramNode(start, stop, [_build(a, b, split) for a, b in split(start, stop)])


def build_dendrogram_balanced(n, d=2):
    """Split [0, n) recursively into at most d near-even contiguous children (larger ones first).

    Args:
        n (int): Number of indices, >= 1.
        d (int): Maximum degree, >= 2.
    """
    if n < 1:
        raise ValueError("n must be >= 1, not {0}".format(n))
    if d < 2:
        raise ValueError("d must be >= 2, not {0}".format(d))
    return Dendrogram(_build(0, n, lambda a, b: _split_evenly(a, b, d)))


def build_dendrogram_halving(n):
    """Binary dendrogram whose left child always holds the first floor(size/2) indices."""
    if n < 1:
        raise ValueError("n must be >= 1, not {0}".format(n))
    return Dendrogram(_build(0, n, lambda a, b: [(a, a + (b - a) // 2), (a + (b - a) // 2, b)]))
