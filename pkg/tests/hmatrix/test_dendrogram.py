import pytest

from ksparse.hmatrix import Dendrogram, DendrogramNode, build_dendrogram_balanced, build_dendrogram_halving


class TestDendrogram:
    def test_binary_eight(self):
        dendrogram = build_dendrogram_balanced(8, 2)
        assert dendrogram.height == 3
        assert dendrogram.degree == 2
        assert [leaf.start for leaf in dendrogram.leaves()] == list(range(8))

    def test_single_leaf(self):
        dendrogram = build_dendrogram_balanced(1)
        assert dendrogram.height == 0
        assert dendrogram.root.is_leaf

    def test_ternary_nine(self):
        dendrogram = build_dendrogram_balanced(9, 3)
        assert [child.size for child in dendrogram.root.children] == [3, 3, 3]
        assert dendrogram.height == 2
        assert dendrogram.degree == 3

    def test_uneven(self):
        dendrogram = build_dendrogram_balanced(7, 3)
        assert [child.size for child in dendrogram.root.children] == [3, 2, 2]

    def test_height_bound(self):
        for n in range(1, 70):
            for d in (2, 3, 4):
                levels = 0
                while d ** levels < n:
                    levels += 1
                assert build_dendrogram_balanced(n, d).height == levels

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            build_dendrogram_balanced(0)
        with pytest.raises(ValueError):
            build_dendrogram_balanced(4, 1)

    def test_halving(self):
        dendrogram = build_dendrogram_halving(5)
        assert [(c.start, c.stop) for c in dendrogram.root.children] == [(0, 2), (2, 5)]

    def test_not_contiguous(self):
        root = DendrogramNode(0, 3, [DendrogramNode(0, 1), DendrogramNode(2, 3)])
        with pytest.raises(ValueError):
            Dendrogram(root)

    def test_leaf_not_singleton(self):
        root = DendrogramNode(0, 3, [DendrogramNode(0, 1), DendrogramNode(1, 3)])
        with pytest.raises(ValueError):
            Dendrogram(root)

    def test_single_child(self):
        root = DendrogramNode(0, 2, [DendrogramNode(0, 2, [DendrogramNode(0, 1), DendrogramNode(1, 2)])])
        with pytest.raises(ValueError):
            Dendrogram(root)

    def test_json(self):
        dendrogram = build_dendrogram_balanced(10, 3)
        data = dendrogram.to_dict()
        assert Dendrogram.from_dict(data).root.to_list() == dendrogram.root.to_list()

    def test_subdendrogram(self):
        dendrogram = build_dendrogram_balanced(8, 2)
        sub = dendrogram.subdendrogram(dendrogram.root.children[1])
        assert sub.n == 4
        assert sub.root.start == 0
