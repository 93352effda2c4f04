from .split import SplitSystem
from .min_norm import build_nullspace_Q, initial_point, solve_min_norm
from .square import solve_square
from .laplacian import LaplacianSystem, back_substitute, l_pseudo_norm, solve_laplacian

__all__ = [
    "SplitSystem",
    "build_nullspace_Q",
    "initial_point",
    "solve_min_norm",
    "solve_square",
    "LaplacianSystem",
    "back_substitute",
    "l_pseudo_norm",
    "solve_laplacian",
]
