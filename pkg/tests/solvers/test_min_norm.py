import math

import numpy as np
import pytest

from ksparse.engine.theory import dense_sigma_min_sq
from ksparse.errors import DimensionMismatchError
from ksparse.graphs import random_connected_graph
from ksparse.solvers import SplitSystem, build_nullspace_Q, initial_point, solve_min_norm

from ..util import dense_min_norm

rng = np.random.default_rng(11)
A_wide = rng.standard_normal((6, 15))
b_wide = rng.standard_normal(6)


class TestNullspaceQ:
    def test_annihilates(self):
        split = SplitSystem.from_matrix(A_wide)
        f = build_nullspace_Q(split)
        Q = f.densify_product()
        assert Q.shape == (15, 9)
        assert np.abs(split.A.densify() @ Q).max() <= 1e-10
        assert np.array_equal(Q[6:], -np.eye(9))
        assert f.augmented_rows == 15

    def test_sparsity(self):
        split = SplitSystem.from_matrix(A_wide)
        f = build_nullspace_Q(split)
        assert f.k <= split.einv.k * split.f + 1

    def test_sigma_min_random_graphs(self):
        for seed in range(6):
            g = random_connected_graph(10 + 2 * seed, 35, seed=seed)
            f = build_nullspace_Q(SplitSystem.from_graph(g))
            assert dense_sigma_min_sq(f) >= 1.0 - 1e-9

    def test_square(self):
        assert build_nullspace_Q(SplitSystem.from_matrix(np.eye(3))) is None


class TestInitialPoint:
    def test_feasible(self):
        split = SplitSystem.from_matrix(A_wide)
        x0 = initial_point(split, b_wide)
        assert np.allclose(split.A.densify() @ x0, b_wide)
        assert not np.any(x0[6:])

    def test_norm_bound(self):
        systems = [(SplitSystem.from_matrix(A_wide), b_wide)]
        for seed in range(5):
            split = SplitSystem.from_graph(random_connected_graph(12 + seed, 30, seed=seed))
            systems.append((split, split.A.densify() @ np.random.default_rng(seed).standard_normal(split.m)))
        for split, b in systems:
            expected = dense_min_norm(split.A.densify(), b)
            coupling = np.linalg.solve(split.E.densify(), split.F.densify())
            bound = math.sqrt(split.r + np.sum(coupling ** 2)) * np.linalg.norm(expected)
            assert np.linalg.norm(initial_point(split, b)) <= bound * (1 + 1e-6)

    def test_length(self):
        split = SplitSystem.from_matrix(A_wide)
        with pytest.raises(DimensionMismatchError):
            initial_point(split, np.ones(5))


class TestSolveMinNorm:
    def test_two_columns(self):
        split = SplitSystem.from_matrix(np.array([[1.0, 1.0]]))
        x, report = solve_min_norm(split, [2.0])
        assert np.allclose(x, [1.0, 1.0], atol=1e-12)
        assert report.solver == "min-norm"

    def test_identity(self):
        split = SplitSystem.from_matrix(np.eye(3))
        x, report = solve_min_norm(split, [1.0, 2.0, 3.0])
        assert x.tolist() == [1.0, 2.0, 3.0]
        assert report.iterations == 0
        assert report.feasibility_residual == 0.0

    def test_zero_rhs(self):
        split = SplitSystem.from_matrix(A_wide)
        x, report = solve_min_norm(split, np.zeros(6))
        assert not np.any(x)
        assert report.iterations == 0

    def test_against_pseudoinverse(self):
        split = SplitSystem.from_matrix(A_wide)
        expected = dense_min_norm(A_wide, b_wide)
        x, report = solve_min_norm(split, b_wide, eps=1e-6, seed=3, oracle=expected)
        assert np.linalg.norm(x - expected) <= 1e-5 * np.linalg.norm(expected)
        assert report.converged
        assert report.error_trace[-1][1] <= 1e-6
        assert report.feasibility_residual <= 1e-9
        report.validate()

    def test_predicted_budget(self):
        split = SplitSystem.from_matrix(A_wide)
        expected = dense_min_norm(A_wide, b_wide)
        x, report = solve_min_norm(split, b_wide, eps=1e-4, seed=1, dense_theory=True)
        assert np.linalg.norm(x - expected) <= 1e-3 * np.linalg.norm(expected)
        assert report.theory["sigma_min_sq"] >= 1.0 - 1e-9
        assert report.theory["sigma_min_sq_lower_bound"] == 1.0
        assert report.budget["max_iters"] == report.iterations
        assert report.kappa == pytest.approx(15 + report.theory["frob_sq"] - 9)

    def test_observer(self):
        split = SplitSystem.from_matrix(A_wide)
        seen = []
        solve_min_norm(split, b_wide, max_iters=64, observer=lambda t, x: seen.append((t, A_wide @ x)))
        assert [t for t, _ in seen] == [0, 1, 2, 4, 8, 16, 32, 64]
        for _, residual in seen:
            assert np.allclose(residual, b_wide)

    def test_deterministic(self):
        split = SplitSystem.from_matrix(A_wide)
        x1, r1 = solve_min_norm(split, b_wide, max_iters=500, seed=9)
        x2, r2 = solve_min_norm(split, b_wide, max_iters=500, seed=9)
        assert np.array_equal(x1, x2)
        assert r1.to_json() == r2.to_json()


@pytest.mark.slow
class TestRandomGraphs:
    def test_reaches_pseudoinverse(self):
        for seed in range(50):
            n = 10 + seed % 31
            g = random_connected_graph(n, min(3 * n, 120), seed=seed)
            split = SplitSystem.from_graph(g)
            A = split.A.densify()
            b = A @ np.random.default_rng(seed).standard_normal(split.m)
            expected = split.to_original(dense_min_norm(A, b))
            eps = 1e-6
            epsilon0 = 1.0 + math.sqrt(split.r + split.stretch)
            kappa = split.m + split.stretch
            budget = 10 * math.ceil(kappa * math.log(epsilon0 / eps))
            x, report = solve_min_norm(split, b, eps=eps, seed=seed, max_iters=budget, oracle=expected)
            assert report.converged
            assert report.error_trace[-1][1] <= eps
            assert np.linalg.norm(x - expected) <= eps * np.linalg.norm(expected)
