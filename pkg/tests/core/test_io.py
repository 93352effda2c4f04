import os
import tempfile

import numpy as np
import pytest

from ksparse.core import (
    ColMajorSparseMatrix,
    read_edge_list,
    read_matrix_market,
    read_vector,
    write_edge_list,
    write_matrix_market,
    write_vector,
)
from ksparse.errors import ParseError
from ksparse.graphs import WeightedGraph

from ..util import random_sparse

tmpdirname = tempfile.TemporaryDirectory()


def write_text(name, text):
    filepath = os.path.join(tmpdirname.name, name)
    with open(filepath, "w") as f:
        f.write(text)
    return filepath


class TestMatrixMarket:
    def test_read_identity(self):
        filepath = write_text(
            "eye.mtx", "%%MatrixMarket matrix coordinate real general\n% comment\n2 2 2\n1 1 1.0\n2 2 1.0\n"
        )
        matrix = read_matrix_market(filepath)
        assert matrix.shape == (2, 2)
        assert np.array_equal(matrix.densify(), np.eye(2))

    def test_round_trip_bit_for_bit(self):
        rng = np.random.default_rng(0)
        dense = rng.standard_normal((6, 5)) * (rng.random((6, 5)) < 0.4)
        dense[0, 0] = 1.0 / 3.0
        matrix = ColMajorSparseMatrix.from_dense(dense)
        filepath = os.path.join(tmpdirname.name, "round_trip.mtx")
        write_matrix_market(filepath, matrix)
        assert read_matrix_market(filepath) == matrix

    def test_round_trip_random(self):
        matrix = random_sparse(12, 9, 3, seed=5)
        filepath = os.path.join(tmpdirname.name, "random.mtx")
        write_matrix_market(filepath, matrix)
        assert read_matrix_market(filepath) == matrix

    def test_duplicate_coordinate(self):
        filepath = write_text(
            "dup.mtx", "%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 1.0\n1 1 2.0\n"
        )
        with pytest.raises(ParseError) as excinfo:
            read_matrix_market(filepath)
        assert excinfo.value.lineno == 4

    def test_out_of_range(self):
        filepath = write_text("range.mtx", "%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 1.0\n")
        with pytest.raises(ParseError) as excinfo:
            read_matrix_market(filepath)
        assert excinfo.value.lineno == 3
        assert excinfo.value.path == filepath

    def test_count_mismatch(self):
        filepath = write_text("count.mtx", "%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 1.0\n")
        with pytest.raises(ParseError):
            read_matrix_market(filepath)

    def test_bad_header(self):
        filepath = write_text("header.mtx", "%%MatrixMarket matrix coordinate complex general\n1 1 0\n")
        with pytest.raises(ParseError):
            read_matrix_market(filepath)


class TestVectors:
    def test_round_trip(self):
        x = np.array([0.1, -2.0, 0.0, 1e-300])
        filepath = os.path.join(tmpdirname.name, "x.mtx")
        write_vector(filepath, x)
        assert np.array_equal(read_vector(filepath), x)

    def test_coordinate_vector(self):
        filepath = write_text("b.mtx", "%%MatrixMarket matrix coordinate real general\n3 1 1\n2 1 5.0\n")
        assert read_vector(filepath).tolist() == [0.0, 5.0, 0.0]

    def test_too_many_values(self):
        filepath = write_text("long.mtx", "%%MatrixMarket matrix array real general\n1 1\n1.0\n2.0\n")
        with pytest.raises(ParseError) as excinfo:
            read_vector(filepath)
        assert excinfo.value.lineno == 4


class TestEdgeList:
    def test_single_edge(self):
        g = read_edge_list(write_text("edge.txt", "1 2 1.0\n"))
        assert g.n == 2
        assert g.m == 1
        assert g.edges[0] == (0, 1, 1.0)

    def test_comments_ignored(self):
        g = read_edge_list(write_text("comments.txt", "# a triangle\n1 2 1.0\n2 3 2.0\n\n# done\n1 3 0.5\n"))
        assert g.n == 3
        assert g.m == 3

    def test_malformed_line(self):
        filepath = write_text("malformed.txt", "1 2 1.0\n1 2\n")
        with pytest.raises(ParseError) as excinfo:
            read_edge_list(filepath)
        assert excinfo.value.lineno == 2

    def test_nonpositive_weight(self):
        with pytest.raises(ParseError):
            read_edge_list(write_text("weight.txt", "1 2 0.0\n"))

    def test_self_loop(self):
        with pytest.raises(ParseError):
            read_edge_list(write_text("loop.txt", "2 2 1.0\n"))

    def test_round_trip(self):
        g = WeightedGraph(4, [(0, 1, 0.25), (1, 2, 3.0), (0, 3, 1.0 / 7.0), (0, 1, 2.0)])
        filepath = os.path.join(tmpdirname.name, "graph.txt")
        write_edge_list(filepath, g)
        loaded = read_edge_list(filepath)
        assert loaded.n == 4
        assert loaded.edges == g.edges
