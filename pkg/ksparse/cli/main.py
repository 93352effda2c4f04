import argparse
import sys
import warnings

import jsonschema

from .._version import __version__
from ..errors import (
    BudgetExhaustedError,
    DisconnectedGraphError,
    IncompatibleSystemError,
    KSparseError,
    ParseError,
)
from .commands import COMMANDS
from .config import RunConfig

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARSE = 2
EXIT_INCOMPATIBLE = 3
EXIT_DISCONNECTED = 4
EXIT_BUDGET = 5


def build_parser():
    parser = argparse.ArgumentParser(prog="ksparse", description="Sparse factorizations and randomized projection solvers.")
    parser.add_argument("--version", action="version", version="%(prog)s {0}".format(__version__))
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON or YAML RunConfig file; flags override its values")
    common.add_argument("--eps", type=float, help="target accuracy in (0, 1)")
    common.add_argument("--seed", type=int, help="sampling seed")
    common.add_argument("--max-iters", dest="max_iters", type=int, help="cap on the number of sampled steps")
    common.add_argument("--tree", help="spanning tree strategy: mst, akpw or given:<path>")
    common.add_argument("--ground", type=int, help="grounded node (1-based)")
    common.add_argument("--report", help="write the JSON report here instead of stdout")
    common.add_argument("--trace-stride", dest="trace_stride", type=int, help="error trace stride")
    common.add_argument("--out", help="solution vector, factorization directory, tree JSON or bench CSV")
    common.add_argument("--verbose", action="store_true", default=None, help="print progress to stderr")

    factorize = subparsers.add_parser("factorize", parents=[common], help="factorize and validate a matrix")
    factorize.add_argument("--matrix", help="Matrix Market file")
    factorize.add_argument("--hmatrix", help="HMatrix JSON file")
    factorize.add_argument("--graph", help="edge list; factorizes the inverse tree incidence matrix")
    factorize.add_argument("--tol", type=float, help="validation tolerance")

    for name, help_text in (
        ("solve-min-norm", "minimum-norm solution of an underdetermined system"),
        ("solve-square", "square or least-squares solve"),
    ):
        solve = subparsers.add_parser(name, parents=[common], help=help_text)
        solve.add_argument("--matrix", help="Matrix Market file")
        solve.add_argument("--rhs", help="right-hand side vector (Matrix Market)")

    laplacian = subparsers.add_parser("solve-laplacian", parents=[common], help="solve L chi = c on a graph")
    laplacian.add_argument("--graph", help="edge list")
    laplacian.add_argument("--rhs", help="zero-sum right-hand side vector (Matrix Market)")

    stretch = subparsers.add_parser("stretch", parents=[common], help="spanning tree stretch of a graph")
    stretch.add_argument("--graph", help="edge list")

    bench = subparsers.add_parser("bench", parents=[common], help="benchmark a generated graph family")
    bench.add_argument("--family", help="path, grid, random-tree or random-graph")
    bench.add_argument("--sizes", type=int, nargs="*", help="ascending node counts")
    bench.add_argument("--seeds", type=int, nargs="*", help="seeds per size")
    bench.add_argument("--bench-iters", dest="bench_iters", type=int, help="sampled steps per instance")
    return parser


def build_config(args):
    """Merge the configuration file (if any) with the flags that were given."""
    overrides = {key: value for key, value in vars(args).items() if key not in ("command", "config")}
    if args.config is not None:
        if args.config.endswith((".yaml", ".yml")):
            base = RunConfig.from_yaml(args.config)
        else:
            base = RunConfig.from_json(args.config)
    else:
        base = RunConfig(args.command)
    return base.merged(command=args.command, **overrides)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        config = build_config(args)
    except (jsonschema.ValidationError, ValueError, OSError) as e:
        print("Invalid configuration: {0}".format(e), file=sys.stderr)
        return EXIT_PARSE
    try:
        with warnings.catch_warnings():
            if not config.verbose:
                warnings.simplefilter("ignore", RuntimeWarning)
            return COMMANDS[config.command](config)
    except (ParseError, jsonschema.ValidationError) as e:
        print("Parse error: {0}".format(e), file=sys.stderr)
        return EXIT_PARSE
    except IncompatibleSystemError as e:
        print("Incompatible system: {0}".format(e), file=sys.stderr)
        return EXIT_INCOMPATIBLE
    except DisconnectedGraphError as e:
        print("Disconnected graph: {0}".format(e), file=sys.stderr)
        return EXIT_DISCONNECTED
    except BudgetExhaustedError as e:
        print("Budget exhausted: {0}".format(e), file=sys.stderr)
        return EXIT_BUDGET
    except (KSparseError, ValueError, OSError) as e:
        print("Error: {0}".format(e), file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
