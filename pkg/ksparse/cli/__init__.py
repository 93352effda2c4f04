from .config import RunConfig
from .bench import BenchPipeline
from .commands import COMMANDS, cmd_bench, cmd_factorize, cmd_solve_laplacian, cmd_solve_min_norm, cmd_solve_square, cmd_stretch
from .main import build_config, build_parser, main

__all__ = [
    "RunConfig",
    "BenchPipeline",
    "COMMANDS",
    "cmd_bench",
    "cmd_factorize",
    "cmd_solve_laplacian",
    "cmd_solve_min_norm",
    "cmd_solve_square",
    "cmd_stretch",
    "build_config",
    "build_parser",
    "main",
]
