import json
import warnings

import numpy as np
import scipy.linalg

from .. import util
from ..errors import DimensionMismatchError
from .dendrogram import Dendrogram


class HBlock:
    """The diagonal block of an HMatrix at one dendrogram node.

    A leaf holds a scalar. An internal block holds the diagonal blocks of its children and the
    low-rank factors (left, right) of its off-diagonal elementary blocks, keyed by the pair of child
    positions (i, j), i != j. Missing pairs are zero blocks.
    """

    def __init__(self, node, value=None, diagonal=None, off_diagonal=None):
        self.node = node
        self.value = value
        self.diagonal = diagonal or []
        self.off_diagonal = off_diagonal or {}

    @property
    def is_leaf(self):
        return self.node.is_leaf

    def iter_blocks(self):
        """Yield every block in the subtree, this one first."""
        yield self
        for child in self.diagonal:
            yield from child.iter_blocks()

    def fill(self, out, offset):
        """Write the dense block into out, with the interval start shifted by -offset."""
        start = self.node.start - offset
        if self.is_leaf:
            out[start, start] = self.value
            return
        children = self.node.children
        for child in self.diagonal:
            child.fill(out, offset)
        for (i, j), (left, right) in self.off_diagonal.items():
            rows = slice(children[i].start - offset, children[i].stop - offset)
            cols = slice(children[j].start - offset, children[j].stop - offset)
            out[rows, cols] = left @ right

    def to_dict(self):
        if self.is_leaf:
            return {"value": float(self.value)}
        return {
            "diagonal": [child.to_dict() for child in self.diagonal],
            "off_diagonal": [
                {"i": i, "j": j, "left": left.tolist(), "right": right.tolist()}
                for (i, j), (left, right) in sorted(self.off_diagonal.items())
                if left.shape[1] > 0
            ],
        }

    @classmethod
    def from_dict(cls, data, node):
        if node.is_leaf:
            return cls(node, value=float(data["value"]))
        if len(data["diagonal"]) != len(node.children):
            raise ValueError("Block [{0}, {1}) lists the wrong number of diagonal blocks".format(node.start, node.stop))
        diagonal = [cls.from_dict(d, child) for d, child in zip(data["diagonal"], node.children)]
        off_diagonal = {}
        for entry in data["off_diagonal"]:
            i, j = entry["i"], entry["j"]
            left = np.array(entry["left"], dtype=np.float64).reshape(node.children[i].size, -1)
            right = np.array(entry["right"], dtype=np.float64).reshape(left.shape[1], node.children[j].size)
            off_diagonal[(i, j)] = (left, right)
        return cls(node, diagonal=diagonal, off_diagonal=off_diagonal)


class HMatrix:
    """A square matrix in hierarchical block low-rank form over a dendrogram.

    Every off-diagonal elementary block (I_i x I_j) of a dendrogram node is stored as dense
    factors left (|I_i| x r_ij) and right (r_ij x |I_j|) with r_ij <= r; diagonal blocks recurse down
    to 1x1 scalars.

    Attributes:
        dendrogram (Dendrogram): The hierarchical partition.
        root (HBlock): The block of the root node.
        r (int): The declared rank bound.
        compression_error (float or None): Largest entrywise block error, set by compress_dense.
    """

    def __init__(self, dendrogram, root, r, compression_error=None):
        self.dendrogram = dendrogram
        self.root = root
        self.r = int(r)
        self.compression_error = compression_error
        self.validate()

    @property
    def n(self):
        return self.dendrogram.n

    @property
    def height(self):
        return self.dendrogram.height

    @property
    def degree(self):
        return self.dendrogram.degree

    def validate(self):
        for block in self.root.iter_blocks():
            if block.is_leaf:
                if block.value is None:
                    raise ValueError("Leaf block at {0} has no value".format(block.node.start))
                continue
            children = block.node.children
            for (i, j), (left, right) in block.off_diagonal.items():
                if i == j or not (0 <= i < len(children) and 0 <= j < len(children)):
                    raise ValueError("Invalid off-diagonal block position ({0}, {1})".format(i, j))
                if left.shape[0] != children[i].size or right.shape[1] != children[j].size or left.shape[1] != right.shape[0]:
                    raise DimensionMismatchError(
                        "Factors of block ({0}, {1}) under [{2}, {3}) have shapes {4} and {5}".format(
                            i, j, block.node.start, block.node.stop, left.shape, right.shape
                        )
                    )
                if left.shape[1] > self.r:
                    raise ValueError(
                        "Block ({0}, {1}) under [{2}, {3}) has rank {4} > r={5}".format(
                            i, j, block.node.start, block.node.stop, left.shape[1], self.r
                        )
                    )

    def densify(self):
        out = np.zeros((self.n, self.n))
        self.root.fill(out, 0)
        return out

    def max_rank(self):
        ranks = [0]
        for block in self.root.iter_blocks():
            ranks.extend(left.shape[1] for left, _ in block.off_diagonal.values())
        return max(ranks)

    def sparsity_bound(self):
        """The bound r d (d-1) (h+1) on the sparsity index of factorize_hmatrix(self)."""
        d = self.degree
        return self.r * d * (d - 1) * (self.height + 1)

    def column_bound(self):
        """The bound r d^2 n on the number of columns of C in factorize_hmatrix(self)."""
        return self.r * self.degree ** 2 * self.n

    def find_block(self, node):
        for block in self.root.iter_blocks():
            if block.node.start == node.start and block.node.stop == node.stop:
                return block
        raise ValueError("No block for interval [{0}, {1})".format(node.start, node.stop))

    def diagonal_block(self, node):
        """The diagonal block at a dendrogram node as an HMatrix over the re-based sub-dendrogram."""
        block = self.find_block(node)
        sub = self.dendrogram.subdendrogram(block.node)
        return HMatrix(sub, _rebase(block, sub.root), self.r)

    def to_dict(self):
        return {
            "n": self.n,
            "r": self.r,
            "dendrogram": self.dendrogram.to_dict(),
            "root": self.root.to_dict(),
        }

    @classmethod
    def from_dict(cls, data):
        util.validate_json(data, "hmatrix")
        dendrogram = Dendrogram.from_dict(data["dendrogram"])
        if dendrogram.n != data["n"]:
            raise ValueError("HMatrix n={0} does not match its dendrogram".format(data["n"]))
        return cls(dendrogram, HBlock.from_dict(data["root"], dendrogram.root), data["r"])

    def to_json(self, filepath=None):
        data = self.to_dict()
        util.validate_json(data, "hmatrix")
        text = util.dumps(data)
        if filepath is not None:
            util.write_atomic(filepath, text)
        return text

    @classmethod
    def from_json(cls, filepath):
        with open(filepath) as f:
            return cls.from_dict(json.load(f))

    def __repr__(self):
        return "<HMatrix> n={0}, r={1}, height={2}, degree={3}".format(self.n, self.r, self.height, self.degree)


def _rebase(block, node):
    return HBlock(
        node,
        value=block.value,
        diagonal=[_rebase(child, sub) for child, sub in zip(block.diagonal, node.children)],
        off_diagonal=dict(block.off_diagonal),
    )


def truncated_factors(block, r=None, tol=None):
    """Best rank-<=r factors of a dense block by SVD, dropping singular values <= tol.

    Returns:
        (left, right, error): left @ right approximates block; error is the max-norm error.
    """
    if block.size == 0:
        return np.zeros((block.shape[0], 0)), np.zeros((0, block.shape[1])), 0.0
    u, s, vh = scipy.linalg.svd(block, full_matrices=False)
    cutoff = tol if tol is not None else 1e-12 * (s[0] if s.size else 0.0)
    rank = int(np.sum(s > cutoff))
    if r is not None:
        rank = min(rank, r)
    left = u[:, :rank] * s[:rank]
    right = vh[:rank, :]
    error = float(np.abs(block - left @ right).max())
    return left, right, error


def compress_dense(A, dendrogram, r=None, tol=None):
    """Compress a dense square matrix into an HMatrix over a dendrogram.

    Every off-diagonal elementary block is replaced by its truncated SVD of rank at most r. The result
    is exact when the true block ranks are <= r.

    Args:
        A (ndarray): n x n matrix, n = dendrogram.n.
        dendrogram (Dendrogram): The partition.
        r (int or None): Rank cap. None keeps every singular value above tol.
        tol (float or None): Absolute singular value cutoff. Default 1e-12 times the block's largest.

    Returns:
        hmatrix: An HMatrix whose compression_error is the largest entrywise block error. A
            RuntimeWarning is raised when that error exceeds tol.
    """
    A = np.asarray(A, dtype=np.float64)
    if A.shape != (dendrogram.n, dendrogram.n):
        raise DimensionMismatchError(
            "Matrix of shape {0} does not match a dendrogram of size {1}".format(A.shape, dendrogram.n)
        )
    errors = [0.0]

    def compress(node):
        if node.is_leaf:
            return HBlock(node, value=float(A[node.start, node.start]))
        children = node.children
        off_diagonal = {}
        for i, row in enumerate(children):
            for j, col in enumerate(children):
                if i == j:
                    continue
                left, right, error = truncated_factors(A[row.start:row.stop, col.start:col.stop], r, tol)
                errors.append(error)
                if left.shape[1] > 0:
                    off_diagonal[(i, j)] = (left, right)
        return HBlock(node, diagonal=[compress(child) for child in children], off_diagonal=off_diagonal)

    root = compress(dendrogram.root)
    rank = max([0] + [left.shape[1] for b in root.iter_blocks() for left, _ in b.off_diagonal.values()])
    hmatrix = HMatrix(dendrogram, root, r if r is not None else max(rank, 1), compression_error=max(errors))
    threshold = tol if tol is not None else 1e-10 * max(float(np.abs(A).max()) if A.size else 0.0, 1.0)
    if hmatrix.compression_error > threshold:
        warnings.warn(
            "Compression error {0} exceeds the tolerance {1}".format(hmatrix.compression_error, threshold),
            RuntimeWarning,
        )
    return hmatrix


def random_hmatrix(dendrogram, r, seed=0, diagonal_range=(0.5, 1.5)):
    """A random HMatrix whose off-diagonal elementary blocks have rank exactly min(r, block sizes)
    and whose 1x1 diagonal entries are nonzero with random sign.
    """
    rng = np.random.default_rng(seed)
    low, high = diagonal_range

    def build(node):
        if node.is_leaf:
            sign = 1.0 if rng.random() < 0.5 else -1.0
            return HBlock(node, value=sign * rng.uniform(low, high))
        children = node.children
        off_diagonal = {}
        for i, row in enumerate(children):
            for j, col in enumerate(children):
                if i == j:
                    continue
                rank = min(r, row.size, col.size)
                off_diagonal[(i, j)] = (
                    rng.standard_normal((row.size, rank)),
                    rng.standard_normal((rank, col.size)),
                )
        return HBlock(node, diagonal=[build(child) for child in children], off_diagonal=off_diagonal)

    return HMatrix(dendrogram, build(dendrogram.root), r)
