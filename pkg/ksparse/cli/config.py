from ..common import BaseRecord
from .. import util

COMMANDS = ("factorize", "solve-min-norm", "solve-square", "solve-laplacian", "stretch", "bench")
TREE_CHOICES = ("mst", "akpw", "given")


class RunConfig(BaseRecord):
    """The settings of one CLI invocation.

    Values not given explicitly come from resources/default_config.json. A configuration file
    (JSON or YAML) can supply any key; flags given on the command line override it.

    Attributes:
        command (str): The subcommand, one of COMMANDS.
        matrix, hmatrix, graph, rhs, tree_file (str or None): Input paths.
        out (str or None): Solution file, factorization directory or benchmark CSV.
        report (str or None): Where to write the JSON report. Printed to stdout if None.
        eps (float): Target accuracy, in (0, 1).
        seed (int): Sampling seed.
        max_iters (int or None): Iteration cap overriding the predicted budget.
        tree (str): Spanning tree strategy, "mst", "akpw" or "given" (with tree_file).
        ground (int or None): Grounded node of a Laplacian solve.
        trace_stride (int): Error trace stride, at least 1.
        family, sizes, seeds, bench_iters: Benchmark settings.
        tol (float): Validation tolerance of `factorize`.
        verbose (bool): Print progress.
    """

    _ALLOWED_KEYS = {
        "command",
        "matrix",
        "hmatrix",
        "graph",
        "rhs",
        "tree_file",
        "out",
        "report",
        "eps",
        "tol",
        "seed",
        "max_iters",
        "tree",
        "ground",
        "trace_stride",
        "family",
        "sizes",
        "seeds",
        "bench_iters",
        "verbose",
    }
    _SCHEMA = "run_config"

    def __init__(self, command=None, **kwargs):
        settings = util.load_default_config()
        settings.update(kwargs)
        invalid_keys = set(settings).difference(self._ALLOWED_KEYS)
        if invalid_keys:
            raise ValueError("Invalid RunConfig keys: {0}".format(sorted(invalid_keys)))
        self.command = command
        for key in self._ALLOWED_KEYS - {"command"}:
            setattr(self, key, settings.get(key))
        if self.verbose is None:
            self.verbose = False
        if isinstance(self.tree, str) and self.tree.startswith("given:"):
            self.tree_file = self.tree[len("given:"):]
            self.tree = "given"
        self.validate()
        if self.tree == "given" and not self.tree_file:
            raise ValueError("The 'given' tree strategy needs a tree file, ie. --tree given:<path>")

    def to_dict(self):
        record_dict = super().to_dict()
        record_dict["verbose"] = bool(self.verbose)
        return record_dict

    def merged(self, **overrides):
        """A copy with every override that is not None applied."""
        data = self.to_dict()
        data.update({key: value for key, value in overrides.items() if value is not None})
        command = data.pop("command", None)
        return RunConfig(command, **data)

    @property
    def tree_strategy(self):
        return {"mst": "mst-inverse-weight", "akpw": "akpw-like"}.get(self.tree, self.tree)

    def __repr__(self):
        return "<RunConfig> {0}: eps={1}, seed={2}, tree={3}".format(self.command, self.eps, self.seed, self.tree)
