import numpy as np
import pytest

from ksparse.graphs import grid_graph, make_instance, path_graph, random_connected_graph, random_tree


class TestGenerators:
    def test_path(self):
        g = path_graph(5)
        assert g.edges == [(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 4, 1.0)]

    def test_weighted_path(self):
        g = path_graph(5, seed=1, weight_range=(0.1, 10.0))
        assert np.all((g.weights >= 0.1) & (g.weights <= 10.0))

    def test_grid(self):
        g = grid_graph(3)
        assert g.n == 9
        assert g.m == 12
        assert (0, 1, 1.0) in g.edges
        assert (0, 3, 1.0) in g.edges
        assert grid_graph(2, 5).m == 13

    def test_random_tree(self):
        for n in (1, 2, 3, 50):
            g = random_tree(n, seed=n)
            assert g.n == n
            assert g.is_tree()

    def test_deterministic(self):
        assert random_tree(40, seed=3).edges == random_tree(40, seed=3).edges
        assert random_connected_graph(40, seed=3).edges == random_connected_graph(40, seed=3).edges
        assert random_tree(40, seed=3).edges != random_tree(40, seed=4).edges

    def test_random_connected_graph(self):
        g = random_connected_graph(30, seed=1)
        assert g.m == 60
        assert g.connected
        with pytest.raises(ValueError):
            random_connected_graph(5, 3)

    def test_make_instance(self):
        assert make_instance("path", 10).n == 10
        assert make_instance("grid", 64).n == 64
        assert make_instance("random-tree", 20, seed=2).is_tree()
        assert make_instance("random-graph", 20).m == 40
        with pytest.raises(ValueError):
            make_instance("hypercube", 8)
