import time

import numpy as np
import pandas as pd

from ..engine import make_rng
from ..graphs import laplacian, make_instance, spanning_tree
from ..graphs.generators import FAMILIES
from ..solvers import SplitSystem, solve_min_norm

BENCH_COLUMNS = [
    "family",
    "n",
    "m",
    "seed",
    "k",
    "k_bound",
    "height",
    "stretch",
    "iterations",
    "work_per_iter",
    "work_max",
    "wall_time",
]


class BenchPipeline:
    """The BenchPipeline runs the minimum-norm step of the Laplacian solver over a family of
    generated graphs and collects one row of measurements per (size, seed).
    """

    def __init__(self, family, sizes, seeds=(0,), eps=1e-6, max_iters=2000, tree_strategy="mst-inverse-weight",
                 debug=False):
        """Create a new BenchPipeline.
        Args:
            family (str): Graph family, one of "path", "grid", "random-tree", "random-graph".
            sizes (list of int): Node counts, ascending.
            seeds (list of int): Seeds; every size is run once per seed.
            eps (float): Inner accuracy handed to the solver.
            max_iters (int): Fixed number of sampled steps per instance, so work per step is
                measured over the same budget for every size.
            tree_strategy (str): Spanning tree strategy.
            debug (bool): Print a line per instance.
        """
        if family not in FAMILIES:
            raise ValueError("Invalid family. Supported families are {0}, not {1}".format(sorted(FAMILIES), family))
        sizes = list(sizes)
        if sizes != sorted(sizes):
            raise ValueError("Benchmark sizes must be ascending, got {0}".format(sizes))
        self.family = family
        self.sizes = sizes
        self.seeds = list(seeds)
        self.eps = eps
        self.max_iters = max_iters
        self.tree_strategy = tree_strategy
        self.debug = debug

    def run_instance(self, n, seed):
        g = make_instance(self.family, n, seed)
        rng = make_rng(seed)
        chi = rng.standard_normal(g.n)
        c = laplacian(g) @ chi
        c -= c.mean()
        start = time.perf_counter()
        tree = spanning_tree(g, self.tree_strategy)
        split = SplitSystem.from_graph(g, tree=tree)
        _, report = solve_min_norm(split, split.reduce_rhs(c), eps=self.eps, seed=seed, max_iters=self.max_iters)
        wall_time = time.perf_counter() - start
        row = {
            "family": self.family,
            "n": g.n,
            "m": g.m,
            "seed": seed,
            "k": split.einv.k,
            "k_bound": split.factorizations.k_bound,
            "height": split.factorizations.ordering.height,
            "stretch": split.stretch,
            "iterations": report.iterations,
            "work_per_iter": report.work_per_iteration["mean"],
            "work_max": report.work_per_iteration["max"],
            "wall_time": wall_time,
        }
        if self.debug:
            print("{0} n={1} seed={2}: k={3}, {4} iterations".format(self.family, g.n, seed, row["k"], row["iterations"]))
        return row

    def process(self):
        """Run every instance and return the measurements as a DataFrame sorted by (family, n, seed)."""
        rows = []
        for n in self.sizes:
            for seed in self.seeds:
                rows.append(self.run_instance(n, seed))
        data = pd.DataFrame(rows, columns=BENCH_COLUMNS)
        if len(data):
            data = data.sort_values(["family", "n", "seed"], kind="mergesort").reset_index(drop=True)
        return data

    def __repr__(self):
        return "<BenchPipeline> {0}, sizes {1}, seeds {2}".format(self.family, self.sizes, self.seeds)
