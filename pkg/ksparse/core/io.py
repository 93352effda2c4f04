"""Readers and writers for the plain-text formats ksparse consumes and emits:
Matrix Market coordinate matrices, Matrix Market vectors and weighted edge lists.
"""
import numpy as np

from .. import util
from ..errors import ParseError
from .sparse_matrix import ColMajorSparseMatrix

MATRIX_MARKET_HEADER = "%%MatrixMarket matrix coordinate real general"
MATRIX_MARKET_ARRAY_HEADER = "%%MatrixMarket matrix array real general"


def _content_lines(filepath, comment):
    """Yield (lineno, stripped line) for every non-blank, non-comment line after the first."""
    with open(filepath) as f:
        for lineno, line in enumerate(f, start=1):
            if lineno == 1:
                continue
            stripped = line.strip()
            if not stripped or stripped.startswith(comment):
                continue
            yield lineno, stripped


def _read_header(filepath):
    with open(filepath) as f:
        first = f.readline()
    if not first:
        raise ParseError("empty file", filepath, 1)
    return " ".join(first.strip().lower().split())


def _parse_int(token, filepath, lineno, what):
    try:
        return int(token)
    except ValueError:
        raise ParseError("expected an integer {0}, got '{1}'".format(what, token), filepath, lineno)


def _parse_float(token, filepath, lineno):
    try:
        value = float(token)
    except ValueError:
        raise ParseError("expected a real value, got '{0}'".format(token), filepath, lineno)
    if not np.isfinite(value):
        raise ParseError("non-finite value '{0}'".format(token), filepath, lineno)
    return value


def read_matrix_market(filepath):
    """Read a Matrix Market coordinate file into a ColMajorSparseMatrix.

    Indices in the file are 1-based. Duplicate coordinates are an error rather than being
    summed; entries equal to 0.0 are accepted and dropped.

    Args:
        filepath (str): Path to the .mtx file.
    Returns:
        matrix: A ColMajorSparseMatrix
    Raises:
        ParseError: naming the file and the offending line.
    """
    header = _read_header(filepath)
    if header != MATRIX_MARKET_HEADER.lower():
        raise ParseError(
            "unsupported header, expected '{0}'".format(MATRIX_MARKET_HEADER), filepath, 1
        )
    lines = _content_lines(filepath, "%")
    try:
        lineno, size_line = next(lines)
    except StopIteration:
        raise ParseError("missing size line", filepath, None)
    tokens = size_line.split()
    if len(tokens) != 3:
        raise ParseError("size line must be 'rows cols nnz'", filepath, lineno)
    rows, cols, nnz = (_parse_int(t, filepath, lineno, "size") for t in tokens)
    if rows < 0 or cols < 0 or nnz < 0:
        raise ParseError("negative size", filepath, lineno)

    row_idx = np.zeros(nnz, dtype=np.int64)
    col_idx = np.zeros(nnz, dtype=np.int64)
    values = np.zeros(nnz, dtype=np.float64)
    seen = {}
    count = 0
    for lineno, line in lines:
        tokens = line.split()
        if len(tokens) != 3:
            raise ParseError("entry line must be 'row col value'", filepath, lineno)
        i = _parse_int(tokens[0], filepath, lineno, "row index")
        j = _parse_int(tokens[1], filepath, lineno, "column index")
        value = _parse_float(tokens[2], filepath, lineno)
        if not (1 <= i <= rows and 1 <= j <= cols):
            raise ParseError(
                "coordinate ({0}, {1}) outside a {2}x{3} matrix".format(i, j, rows, cols), filepath, lineno
            )
        if (i, j) in seen:
            raise ParseError(
                "duplicate coordinate ({0}, {1}), first given on line {2}".format(i, j, seen[(i, j)]),
                filepath,
                lineno,
            )
        if count >= nnz:
            raise ParseError("more entries than the {0} declared".format(nnz), filepath, lineno)
        seen[(i, j)] = lineno
        row_idx[count] = i - 1
        col_idx[count] = j - 1
        values[count] = value
        count += 1
    if count != nnz:
        raise ParseError("declared {0} entries but found {1}".format(nnz, count), filepath, None)
    return ColMajorSparseMatrix.from_coo(rows, cols, row_idx, col_idx, values)


def write_matrix_market(filepath, matrix):
    """Write a ColMajorSparseMatrix in Matrix Market coordinate format, column by column.
    Values are written with repr so a subsequent read reproduces them bit for bit.
    """
    csc = matrix.to_scipy()
    lines = [MATRIX_MARKET_HEADER, "{0} {1} {2}".format(matrix.rows, matrix.cols, matrix.nnz)]
    for j in range(matrix.cols):
        for ptr in range(csc.indptr[j], csc.indptr[j + 1]):
            lines.append(
                "{0} {1} {2}".format(int(csc.indices[ptr]) + 1, j + 1, util.format_float(csc.data[ptr]))
            )
    util.write_atomic(filepath, "\n".join(lines) + "\n")


def read_vector(filepath):
    """Read a dense vector stored as a one-column Matrix Market file (array or coordinate format)."""
    header = _read_header(filepath)
    if header == MATRIX_MARKET_HEADER.lower():
        matrix = read_matrix_market(filepath)
        if matrix.cols != 1:
            raise ParseError("a vector file must have exactly one column", filepath, None)
        return matrix.densify()[:, 0]
    if header != MATRIX_MARKET_ARRAY_HEADER.lower():
        raise ParseError(
            "unsupported header, expected '{0}'".format(MATRIX_MARKET_ARRAY_HEADER), filepath, 1
        )
    lines = _content_lines(filepath, "%")
    try:
        lineno, size_line = next(lines)
    except StopIteration:
        raise ParseError("missing size line", filepath, None)
    tokens = size_line.split()
    if len(tokens) != 2 or _parse_int(tokens[1], filepath, lineno, "column count") != 1:
        raise ParseError("size line must be 'rows 1'", filepath, lineno)
    n = _parse_int(tokens[0], filepath, lineno, "row count")
    values = []
    for lineno, line in lines:
        tokens = line.split()
        if len(tokens) != 1:
            raise ParseError("expected one value per line", filepath, lineno)
        if len(values) >= n:
            raise ParseError("more values than the {0} declared".format(n), filepath, lineno)
        values.append(_parse_float(tokens[0], filepath, lineno))
    if len(values) != n:
        raise ParseError("declared {0} values but found {1}".format(n, len(values)), filepath, None)
    return np.array(values, dtype=np.float64)


def write_vector(filepath, x):
    x = np.asarray(x, dtype=np.float64).reshape(-1)
    lines = [MATRIX_MARKET_ARRAY_HEADER, "{0} 1".format(x.shape[0])]
    lines.extend(util.format_float(v) for v in x)
    util.write_atomic(filepath, "\n".join(lines) + "\n")


def read_edge_list(filepath, n=None):
    """Read a weighted edge list, one "u v w" edge per line with 1-based node ids.

    Lines starting with '#' are ignored. The node count is the largest node id seen,
    unless n is given.

    Returns:
        graph: A WeightedGraph
    Raises:
        ParseError: for malformed lines, self loops and nonpositive weights.
    """
    from ..graphs.graph import WeightedGraph

    edges = []
    max_node = 0
    with open(filepath) as f:
        for lineno, line in enumerate(f, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            tokens = stripped.split()
            if len(tokens) != 3:
                raise ParseError("edge line must be 'u v w'", filepath, lineno)
            u = _parse_int(tokens[0], filepath, lineno, "node id")
            v = _parse_int(tokens[1], filepath, lineno, "node id")
            w = _parse_float(tokens[2], filepath, lineno)
            if u < 1 or v < 1:
                raise ParseError("node ids are 1-based", filepath, lineno)
            if u == v:
                raise ParseError("self loop on node {0}".format(u), filepath, lineno)
            if w <= 0:
                raise ParseError("edge weight must be positive, got {0}".format(w), filepath, lineno)
            if n is not None and max(u, v) > n:
                raise ParseError("node id exceeds node count {0}".format(n), filepath, lineno)
            edges.append((u - 1, v - 1, w))
            max_node = max(max_node, u, v)
    return WeightedGraph(n if n is not None else max_node, edges)


def write_edge_list(filepath, graph):
    lines = ["# {0} nodes, {1} edges".format(graph.n, graph.m)]
    for u, v, w in graph.edges:
        lines.append("{0} {1} {2}".format(u + 1, v + 1, util.format_float(w)))
    util.write_atomic(filepath, "\n".join(lines) + "\n")
