import json
import os
import tempfile

import numpy as np
import pandas as pd
import pytest

from ksparse.core import ColMajorSparseMatrix, read_vector, write_edge_list, write_matrix_market, write_vector
from ksparse.factorization import KSparseFactorization
from ksparse.graphs import WeightedGraph, grid_graph, laplacian, path_graph
from ksparse.hmatrix import build_dendrogram_balanced, random_hmatrix
from ksparse.cli import main
from ksparse.cli.main import EXIT_BUDGET, EXIT_DISCONNECTED, EXIT_FAILURE, EXIT_INCOMPATIBLE, EXIT_OK, EXIT_PARSE

tmpdirname = tempfile.TemporaryDirectory()


def tmp_path(name):
    return os.path.join(tmpdirname.name, name)


def load_json(filepath):
    with open(filepath) as f:
        return json.load(f)


def write_graph(name, g):
    filepath = tmp_path(name)
    write_edge_list(filepath, g)
    return filepath


def write_rhs(name, c):
    filepath = tmp_path(name)
    write_vector(filepath, c)
    return filepath


def write_matrix(name, A):
    filepath = tmp_path(name)
    write_matrix_market(filepath, ColMajorSparseMatrix.from_dense(np.asarray(A, dtype=np.float64)))
    return filepath


def zero_sum(g, seed=0):
    return laplacian(g) @ np.random.default_rng(seed).standard_normal(g.n)


class TestFactorize:
    def test_identity(self):
        matrix = write_matrix("identity.mtx", np.eye(4))
        report = tmp_path("identity.json")
        out = tmp_path("identity_factorization")
        assert main(["factorize", "--matrix", matrix, "--report", report, "--out", out]) == EXIT_OK
        result = load_json(report)
        assert result["k"] == 1
        assert result["validation"]["passed"]
        f = KSparseFactorization.from_directory(out)
        assert np.array_equal(f.densify_product(), np.eye(4))

    def test_graph(self):
        graph = write_graph("path256.txt", path_graph(256))
        report = tmp_path("path256.json")
        assert main(["factorize", "--graph", graph, "--report", report]) == EXIT_OK
        result = load_json(report)
        assert result["k"] <= result["bound"]
        assert result["bound"] == 2 * (result["height"] + 1)
        assert result["n"] == 255

    def test_hmatrix(self):
        filepath = tmp_path("h.json")
        random_hmatrix(build_dendrogram_balanced(16, 2), 2, seed=1).to_json(filepath)
        report = tmp_path("h_report.json")
        assert main(["factorize", "--hmatrix", filepath, "--report", report]) == EXIT_OK
        result = load_json(report)
        assert result["k"] <= result["bound"] == 2 * 2 * 1 * 5

    def test_needs_one_input(self):
        graph = write_graph("two_inputs.txt", path_graph(3))
        matrix = write_matrix("two_inputs.mtx", np.eye(2))
        assert main(["factorize"]) == EXIT_FAILURE
        assert main(["factorize", "--graph", graph, "--matrix", matrix]) == EXIT_FAILURE

    def test_stdout(self, capsys):
        matrix = write_matrix("stdout.mtx", np.eye(2))
        assert main(["factorize", "--matrix", matrix]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["k"] == 1


class TestSolveLaplacian:
    def test_two_nodes(self):
        graph = write_graph("two.txt", WeightedGraph(2, [(0, 1, 1.0)]))
        rhs = write_rhs("two_rhs.mtx", [1.0, -1.0])
        out = tmp_path("two_chi.mtx")
        report = tmp_path("two_report.json")
        code = main(["solve-laplacian", "--graph", graph, "--rhs", rhs, "--ground", "2", "--out", out,
                     "--report", report])
        assert code == EXIT_OK
        assert read_vector(out).tolist() == [1.0, 0.0]
        assert load_json(report)["grounded"] == 2

    def test_grid(self):
        g = grid_graph(8)
        graph = write_graph("grid.txt", g)
        rhs = write_rhs("grid_rhs.mtx", zero_sum(g))
        report = tmp_path("grid_report.json")
        assert main(["solve-laplacian", "--graph", graph, "--rhs", rhs, "--report", report]) == EXIT_OK
        result = load_json(report)
        assert result["solver"] == "laplacian"
        assert result["tree_strategy"] == "mst-inverse-weight"
        assert result["schema"] == 1

    def test_empty_graph(self):
        graph = tmp_path("empty.txt")
        with open(graph, "w") as f:
            f.write("# no edges\n")
        rhs = write_rhs("empty_rhs.mtx", [0.0, 0.0])
        assert main(["solve-laplacian", "--graph", graph, "--rhs", rhs]) == EXIT_DISCONNECTED

    def test_disconnected(self):
        graph = write_graph("split.txt", WeightedGraph(4, [(0, 1, 1.0), (2, 3, 1.0)]))
        rhs = write_rhs("split_rhs.mtx", [1.0, -1.0, 0.0, 0.0])
        assert main(["solve-laplacian", "--graph", graph, "--rhs", rhs]) == EXIT_DISCONNECTED

    def test_incompatible(self):
        graph = write_graph("path3.txt", path_graph(3))
        rhs = write_rhs("path3_rhs.mtx", [1.0, 0.0, 0.0])
        assert main(["solve-laplacian", "--graph", graph, "--rhs", rhs]) == EXIT_INCOMPATIBLE

    def test_malformed_graph(self):
        graph = tmp_path("malformed.txt")
        with open(graph, "w") as f:
            f.write("1 2\n")
        rhs = write_rhs("malformed_rhs.mtx", [0.0, 0.0])
        assert main(["solve-laplacian", "--graph", graph, "--rhs", rhs]) == EXIT_PARSE

    def test_reproducible(self):
        g = path_graph(20, weight_range=(0.5, 2.0))
        graph = write_graph("repeat.txt", g)
        rhs = write_rhs("repeat_rhs.mtx", zero_sum(g, 3))
        reports = []
        for i in range(2):
            report = tmp_path("repeat_{0}.json".format(i))
            args = ["solve-laplacian", "--graph", graph, "--rhs", rhs, "--seed", "7", "--report", report]
            assert main(args) == EXIT_OK
            with open(report, "rb") as f:
                reports.append(f.read())
        assert reports[0] == reports[1]

    def test_given_tree(self):
        g = WeightedGraph(3, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)])
        graph = write_graph("triangle.txt", g)
        tree = tmp_path("triangle_tree.json")
        report = tmp_path("triangle_stretch.json")
        assert main(["stretch", "--graph", graph, "--out", tree, "--report", report]) == EXIT_OK
        assert load_json(report)["stretch"] == 2.0
        rhs = write_rhs("triangle_rhs.mtx", [1.0, 0.0, -1.0])
        report = tmp_path("triangle_report.json")
        args = ["solve-laplacian", "--graph", graph, "--rhs", rhs, "--tree", "given:" + tree, "--report", report]
        assert main(args) == EXIT_OK
        assert load_json(report)["tree_strategy"] == "given"


class TestSolveMatrices:
    def test_min_norm(self):
        matrix = write_matrix("wide.mtx", [[1.0, 1.0]])
        rhs = write_rhs("wide_rhs.mtx", [2.0])
        out = tmp_path("wide_x.mtx")
        assert main(["solve-min-norm", "--matrix", matrix, "--rhs", rhs, "--out", out]) == EXIT_OK
        assert np.allclose(read_vector(out), [1.0, 1.0])

    def test_square(self):
        matrix = write_matrix("diag.mtx", np.diag([1.0, 2.0, 4.0]))
        rhs = write_rhs("diag_rhs.mtx", [1.0, 1.0, 1.0])
        out = tmp_path("diag_y.mtx")
        assert main(["solve-square", "--matrix", matrix, "--rhs", rhs, "--out", out]) == EXIT_OK
        assert np.allclose(read_vector(out), [1.0, 0.5, 0.25], atol=1e-5)

    def test_budget_exhausted(self):
        matrix = write_matrix("singular.mtx", [[1.0, 1.0], [1.0, 1.0]])
        rhs = write_rhs("singular_rhs.mtx", [1.0, 0.0])
        args = ["solve-square", "--matrix", matrix, "--rhs", rhs, "--max-iters", "50"]
        assert main(args) == EXIT_BUDGET

    def test_missing_rhs(self):
        matrix = write_matrix("norhs.mtx", np.eye(2))
        assert main(["solve-square", "--matrix", matrix]) == EXIT_FAILURE


class TestBench:
    def test_path(self):
        out = tmp_path("bench.csv")
        assert main(["bench", "--family", "path", "--sizes", "64", "--bench-iters", "500", "--out", out]) == EXIT_OK
        data = pd.read_csv(out)
        assert len(data) == 1
        row = data.iloc[0]
        assert row["n"] == 64
        assert row["k"] <= row["k_bound"]
        assert row["iterations"] == 500

    def test_no_sizes(self, capsys):
        assert main(["bench", "--family", "grid", "--sizes"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == ",".join(
            ["family", "n", "m", "seed", "k", "k_bound", "height", "stretch", "iterations", "work_per_iter",
             "work_max", "wall_time"]
        )

    def test_descending_sizes(self):
        assert main(["bench", "--family", "path", "--sizes", "32", "16"]) == EXIT_FAILURE


class TestConfiguration:
    def test_eps_out_of_range(self):
        graph = write_graph("eps.txt", path_graph(3))
        assert main(["stretch", "--graph", graph, "--eps", "1.5"]) == EXIT_PARSE
        assert main(["stretch", "--graph", graph, "--eps", "0"]) == EXIT_PARSE

    def test_yaml_config(self):
        g = grid_graph(3)
        config = tmp_path("config.yaml")
        report = tmp_path("yaml_report.json")
        with open(config, "w") as f:
            f.write("graph: {0}\nrhs: {1}\neps: 0.001\nseed: 3\nreport: {2}\n".format(
                write_graph("yaml.txt", g), write_rhs("yaml_rhs.mtx", zero_sum(g)), report
            ))
        assert main(["solve-laplacian", "--config", config, "--seed", "4"]) == EXIT_OK
        result = load_json(report)
        assert result["rng"]["seed"] == 4

    def test_json_config_unknown_key(self):
        config = tmp_path("bad_config.json")
        with open(config, "w") as f:
            json.dump({"graph": "x.txt", "colour": "blue"}, f)
        assert main(["stretch", "--config", config]) == EXIT_PARSE

    def test_missing_config(self):
        assert main(["stretch", "--config", tmp_path("nowhere.json")]) == EXIT_PARSE

    def test_version(self, capsys):
        with pytest.raises(SystemExit):
            main(["--version"])
        assert "ksparse" in capsys.readouterr().out
