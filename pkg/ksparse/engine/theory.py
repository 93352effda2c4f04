"""Iteration counts predicted by the expected convergence rate of the sampled projections:
E ||x_t - x*||^2 <= (1 - sigma_min^2 / ||Q||_F^2)^t ||x_0 - x*||^2.
"""
import math

import numpy as np
import scipy.linalg

from ..core import ColMajorSparseMatrix
from ..errors import BudgetError


def _dense(Q):
    if isinstance(Q, ColMajorSparseMatrix):
        return Q.densify()
    if hasattr(Q, "densify_product"):
        return Q.densify_product()
    return np.asarray(Q, dtype=np.float64)


def dense_singular_values(Q):
    return scipy.linalg.svdvals(_dense(Q))


def dense_sigma_min_sq(Q, tol=None):
    """Smallest nonzero squared singular value of Q (a matrix or a factorization), by dense SVD.
    Singular values at or below tol (default 1e-12 times the largest) count as zero.
    """
    s = dense_singular_values(Q)
    if s.size == 0 or s[0] == 0.0:
        raise ValueError("Q has no nonzero singular value.")
    if tol is None:
        tol = 1e-12 * s[0]
    return float(s[s > tol][-1] ** 2)


def n1_iterations(sigma_min_sq, frob_sq):
    """Iterations expected to reduce the squared error by one decade: -ln(10) / ln(1 - sigma^2 / F)."""
    if not 0.0 < sigma_min_sq < frob_sq:
        raise BudgetError(
            "sigma_min^2 must lie in (0, ||Q||_F^2 = {0}), got {1}".format(frob_sq, sigma_min_sq)
        )
    return -math.log(10.0) / math.log1p(-sigma_min_sq / frob_sq)


def kappa_n1_iterations(kappa):
    """The per-decade count kappa * ln(10) used for null-space bases with sigma_min^2 >= 1."""
    return kappa * math.log(10.0)


def predict_iterations(f, decades, sigma_min_sq=None):
    """Iterations needed for `decades` decades of squared-error reduction, rounded up.

    Args:
        f (KSparseFactorization): The factorization.
        decades (float): Number of decades, >= 0.
        sigma_min_sq (float or None): A lower bound on sigma_min^2(Q). If None, the dense
            value is computed, which is only sensible for small instances.
    """
    if decades < 0:
        raise BudgetError("decades must be >= 0, not {0}".format(decades))
    if sigma_min_sq is None:
        sigma_min_sq = dense_sigma_min_sq(f)
    n1 = n1_iterations(sigma_min_sq, f.frob_sq)
    if decades == 0:
        return 0
    return int(math.ceil(decades * n1))


def expected_error_ratio(sigma_min_sq, frob_sq, t):
    """The bound (1 - sigma^2 / F)^t on E||x_t - x*||^2 / ||x_0 - x*||^2."""
    return (1.0 - sigma_min_sq / frob_sq) ** t


def decades_for(eps, initial_ratio=1.0):
    """Decades of squared-error reduction taking a relative error of initial_ratio down to eps."""
    if not eps > 0:
        raise BudgetError("eps must be positive, not {0}".format(eps))
    return max(0, math.ceil(2.0 * math.log10(max(initial_ratio, eps) / eps)))
