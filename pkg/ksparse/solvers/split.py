import numpy as np
import scipy.linalg
import scipy.sparse as sp

from ..core import ColMajorSparseMatrix
from ..errors import DimensionMismatchError, FactorizationError
from ..factorization import trivial_factorization
from ..graphs import reduced_tree_incidence, separator_ordering, spanning_tree, stretch, tree_E_factorizations
from ..hmatrix import compress_dense, factorize_hmatrix


class SplitSystem:
    """A full-row-rank system matrix split as A = [E F] after a column permutation, with E invertible
    and E^{-1} available as a sparse factorization.

    Vectors in "split order" list the E columns first, then the F columns; `column_order[i]` is the
    original column at split position i. Rows are in the order of `row_order` (original row ids,
    or node ids for graphs).

    Attributes:
        E (ColMajorSparseMatrix): r x r
        F (ColMajorSparseMatrix): r x (m - r)
        einv (KSparseFactorization): factorization of E^{-1}
        column_order (ndarray): split position -> original column
        row_order (ndarray): row position -> original row (or node)
        graph, tree, ordering: set by from_graph
    """

    def __init__(self, E, F, einv, column_order, row_order=None, graph=None, tree=None, ordering=None):
        if E.rows != E.cols or F.rows != E.rows:
            raise DimensionMismatchError("E must be square and F must have its row count, got {0} and {1}".format(E.shape, F.shape))
        if einv.shape != E.shape:
            raise DimensionMismatchError("E^{{-1}} factorization has shape {0}, E {1}".format(einv.shape, E.shape))
        self.E = E
        self.F = F
        self.einv = einv
        self.column_order = np.asarray(column_order, dtype=np.int64)
        self.row_order = np.arange(E.rows) if row_order is None else np.asarray(row_order, dtype=np.int64)
        self.graph = graph
        self.tree = tree
        self.ordering = ordering
        self._stretch = None
        self.factorizations = None
        self._inverse_columns = np.argsort(self.column_order)

    @property
    def r(self):
        return self.E.rows

    @property
    def m(self):
        return self.E.cols + self.F.cols

    @property
    def f(self):
        """Largest column support of F."""
        return self.F.max_column_support()

    @property
    def A(self):
        """[E F] in split order."""
        return ColMajorSparseMatrix.from_scipy(sp.hstack([self.E.to_scipy(), self.F.to_scipy()], format="csc"))

    @property
    def stretch(self):
        """The tree stretch, for splits built from a graph."""
        if self._stretch is None and self.graph is not None:
            self._stretch = stretch(self.graph, self.tree)
        return self._stretch

    def to_original(self, x):
        """Reorder a split-order vector into original column order."""
        return np.asarray(x)[self._inverse_columns]

    def to_split(self, x):
        return np.asarray(x)[self.column_order]

    def apply_einv(self, b):
        """E^{-1} b through the factorization, counted as work."""
        return self.einv.C.matvec(self.einv.D.matvec(np.asarray(b, dtype=np.float64)))

    def verify_inverse(self, tol=1e-9):
        """Whether densify(E) . densify(E^{-1}) = I within tol in max norm."""
        product = self.E.densify() @ self.einv.densify_product()
        return float(np.abs(product - np.eye(self.r)).max(initial=0.0)) <= tol

    def reduce_rhs(self, c):
        """Select the rows of a right-hand side given in original row (or node) order."""
        return np.asarray(c, dtype=np.float64)[self.row_order]

    @classmethod
    def from_graph(cls, g, tree=None, strategy="mst-inverse-weight", root=None):
        """Split the reduced incidence matrix of a connected graph on a spanning tree.

        E holds the tree edges (edge joining a node to its parent, oriented parent to child) in
        separator order, F the non-tree edges in ascending edge order, oriented from the smaller
        to the larger node id. The grounded node is the tree root.
        """
        if tree is None:
            tree = spanning_tree(g, strategy, root=root)
        elif root is not None and root != tree.root:
            tree = tree.reroot(root)
        ordering = separator_ordering(tree)
        factorizations = tree_E_factorizations(tree, ordering)
        E = reduced_tree_incidence(tree, ordering)
        tree_columns = tree.edge_ids[ordering.order]
        in_tree = np.zeros(g.m, dtype=bool)
        in_tree[tree_columns] = True
        other = np.flatnonzero(~in_tree)
        rows, cols, values = [], [], []
        for col, i in enumerate(other):
            u, v, w = g.edges[i]
            source, target = min(u, v), max(u, v)
            root_w = np.sqrt(w)
            for node, value in ((source, -root_w), (target, root_w)):
                if node != tree.root:
                    rows.append(ordering.position[node])
                    cols.append(col)
                    values.append(value)
        F = ColMajorSparseMatrix.from_coo(E.rows, other.shape[0], rows, cols, values)
        split = cls(
            E,
            F,
            factorizations.Einv,
            np.concatenate([tree_columns, other]),
            row_order=ordering.order,
            graph=g,
            tree=tree,
            ordering=ordering,
        )
        split.factorizations = factorizations
        return split

    @classmethod
    def from_matrix(cls, A, basis=None, dendrogram=None, rank=None, tol=None):
        """Split a general full-row-rank matrix.

        Args:
            A (ColMajorSparseMatrix or ndarray): r x m, full row rank.
            basis (list of int or None): The columns forming E. Default: the first r pivots of a
                column-pivoted QR decomposition.
            dendrogram (Dendrogram or None): If given, E^{-1} is compressed into an HMatrix over it and
                factorized hierarchically; otherwise the better trivial factorization is used.
            rank (int or None): Rank cap for the hierarchical compression.
            tol (float or None): Singular value cutoff for the hierarchical compression.
        """
        if not isinstance(A, ColMajorSparseMatrix):
            A = ColMajorSparseMatrix.from_dense(A)
        r, m = A.shape
        dense = A.densify()
        if basis is None:
            _, R, pivots = scipy.linalg.qr(dense, pivoting=True, mode="economic")
            diag = np.abs(np.diag(R))
            if diag.size < r or diag[r - 1] <= 1e-12 * max(diag[0], 1e-300):
                raise FactorizationError("A does not have full row rank")
            basis = np.sort(pivots[:r])
        basis = np.asarray(basis, dtype=np.int64)
        if basis.shape[0] != r or np.unique(basis).shape[0] != r:
            raise ValueError("A basis needs {0} distinct columns".format(r))
        rest = np.setdiff1d(np.arange(m), basis)
        E = A.select_columns(basis)
        F = A.select_columns(rest)
        try:
            Einv_dense = scipy.linalg.inv(E.densify())
        except scipy.linalg.LinAlgError:
            raise FactorizationError("The basis columns of A are singular")
        if dendrogram is not None:
            einv = factorize_hmatrix(compress_dense(Einv_dense, dendrogram, r=rank, tol=tol))
        else:
            einv = trivial_factorization(ColMajorSparseMatrix.from_dense(Einv_dense))
        return cls(E, F, einv, np.concatenate([basis, rest]))

    def __repr__(self):
        return "<SplitSystem> E {0}x{0}, F {0}x{1}, k(E^-1)={2}".format(self.r, self.F.cols, self.einv.k)
