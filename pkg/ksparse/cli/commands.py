"""The subcommands of the ksparse CLI.

Every command takes a RunConfig, reads and validates its inputs before computing anything, and
returns the process exit status. Errors are raised and mapped to exit codes by main().
"""
import sys

import numpy as np

from .. import util
from ..core import read_edge_list, read_matrix_market, read_vector, write_vector
from ..factorization import trivial_factorization, validate
from ..graphs import SpanningTree, reduced_tree_incidence, spanning_tree, stretch, tree_E_factorizations
from ..hmatrix import HMatrix, factorize_hmatrix
from ..solvers import LaplacianSystem, SplitSystem, solve_laplacian, solve_min_norm, solve_square
from .bench import BenchPipeline


def _require(config, *keys):
    missing = [key for key in keys if getattr(config, key) is None]
    if missing:
        raise ValueError("{0} requires {1}".format(config.command, ", ".join("--" + key.replace("_", "-") for key in missing)))


def _emit(config, text):
    """Write JSON text to the report path, or to stdout when no path is configured."""
    if config.report is not None:
        util.write_atomic(config.report, text)
    else:
        sys.stdout.write(text)


def _log(config, msg):
    if config.verbose:
        print(msg, file=sys.stderr)


def _ground(config):
    """The grounded node as a 0-based index. CLI node ids are 1-based like the edge list format."""
    return None if config.ground is None else config.ground - 1


def _given_tree(config):
    if config.tree != "given":
        return None
    return SpanningTree.from_json(config.tree_file)


def _spanning_tree(config, g):
    tree = _given_tree(config)
    return spanning_tree(g, config.tree_strategy, root=_ground(config), tree=tree)


def cmd_factorize(config):
    """Factorize a Matrix Market matrix, an HMatrix JSON file, or the inverse of the reduced
    incidence matrix of a graph's spanning tree, validate the factorization against the dense
    matrix and export it to --out. Exits 1 if validation fails.
    """
    inputs = [key for key in ("matrix", "hmatrix", "graph") if getattr(config, key) is not None]
    if len(inputs) != 1:
        raise ValueError("factorize needs exactly one of --matrix, --hmatrix, --graph")
    result = {}
    if config.matrix is not None:
        Q = read_matrix_market(config.matrix)
        f = trivial_factorization(Q)
    elif config.hmatrix is not None:
        H = HMatrix.from_json(config.hmatrix)
        f = factorize_hmatrix(H)
        Q = H.densify()
        result["bound"] = H.sparsity_bound()
    else:
        g = read_edge_list(config.graph)
        tree = _spanning_tree(config, g)
        factorizations = tree_E_factorizations(tree)
        f = factorizations.Einv
        Q = np.linalg.inv(reduced_tree_incidence(tree, factorizations.ordering).densify())
        result["bound"] = factorizations.k_bound
        result["height"] = factorizations.ordering.height
        result["stretch"] = stretch(g, tree)
    _log(config, "Built {0}".format(f))
    report = validate(f, Q, tol=config.tol)
    if config.out is not None and report.passed:
        f.to_directory(config.out)
        _log(config, "Exported to {0}".format(config.out))
    result.update({"k": f.k, "p": f.p, "m": f.m, "n": f.n, "validation": report.to_dict()})
    _emit(config, util.dumps(result))
    return 0 if report.passed else 1


def cmd_solve_min_norm(config):
    """Minimum-norm solution of an underdetermined full-row-rank system A x = b."""
    _require(config, "matrix", "rhs")
    A = read_matrix_market(config.matrix)
    b = read_vector(config.rhs)
    split = SplitSystem.from_matrix(A)
    _log(config, "Split {0}".format(split))
    x, report = solve_min_norm(
        split,
        split.reduce_rhs(b),
        eps=config.eps,
        seed=config.seed,
        max_iters=config.max_iters,
        trace_stride=config.trace_stride,
        debug=config.verbose,
    )
    return _finish(config, x, report)


def cmd_solve_square(config):
    """Square (A y = b) or overdetermined least-squares (min ||A y - b||) solve."""
    _require(config, "matrix", "rhs")
    A = read_matrix_market(config.matrix)
    b = read_vector(config.rhs)
    f = trivial_factorization(A)
    y, report = solve_square(
        f,
        b,
        eps=config.eps,
        seed=config.seed,
        max_iters=config.max_iters,
        trace_stride=config.trace_stride,
        strict=True,
        debug=config.verbose,
    )
    return _finish(config, y, report)


def cmd_solve_laplacian(config):
    """Solve L chi = c for the Laplacian of a weighted edge list."""
    _require(config, "graph", "rhs")
    g = read_edge_list(config.graph)
    c = read_vector(config.rhs)
    system = LaplacianSystem(g, c, grounded=_ground(config))
    chi, report = solve_laplacian(
        system,
        eps=config.eps,
        seed=config.seed,
        tree_strategy=config.tree_strategy,
        tree=_given_tree(config),
        max_iters=config.max_iters,
        trace_stride=config.trace_stride,
        debug=config.verbose,
    )
    report.update(grounded=report.grounded + 1)
    return _finish(config, chi, report)


def _finish(config, solution, report):
    report.validate()
    if config.out is not None:
        write_vector(config.out, solution)
    _emit(config, report.to_json())
    return 0


def cmd_stretch(config):
    """Build a spanning tree of a graph and report its stretch; --out saves the tree as JSON."""
    _require(config, "graph")
    g = read_edge_list(config.graph)
    tree = _spanning_tree(config, g)
    result = {
        "n": g.n,
        "m": g.m,
        "root": tree.root + 1,
        "strategy": tree.strategy,
        "stretch": stretch(g, tree),
    }
    if config.out is not None:
        tree.to_json(config.out)
    _emit(config, util.dumps(result))
    return 0


def cmd_bench(config):
    """Run the benchmark family over the configured sizes and seeds and write a CSV table."""
    pipeline = BenchPipeline(
        config.family,
        config.sizes,
        seeds=config.seeds,
        eps=config.eps,
        max_iters=config.max_iters if config.max_iters is not None else config.bench_iters,
        tree_strategy=config.tree_strategy if config.tree != "given" else "mst-inverse-weight",
        debug=config.verbose,
    )
    data = pipeline.process()
    text = data.to_csv(index=False)
    if config.out is not None:
        util.write_atomic(config.out, text)
    else:
        sys.stdout.write(text)
    return 0


COMMANDS = {
    "factorize": cmd_factorize,
    "solve-min-norm": cmd_solve_min_norm,
    "solve-square": cmd_solve_square,
    "solve-laplacian": cmd_solve_laplacian,
    "stretch": cmd_stretch,
    "bench": cmd_bench,
}
