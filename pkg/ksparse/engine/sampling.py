import numpy as np

RNG_ALGORITHM = "PCG64"


def make_rng(seed):
    return np.random.Generator(np.random.PCG64(seed))


class SamplingDistribution:
    """Column sampling with probability ||q_j||^2 / ||Q||_Frob^2 by binary search over prefix sums."""

    def __init__(self, weights, seed=0):
        weights = np.asarray(weights, dtype=np.float64).reshape(-1)
        if weights.size == 0:
            raise ValueError("Cannot sample from an empty distribution.")
        if np.any(~(weights > 0)):
            raise ValueError("Sampling weights must be strictly positive.")
        self.weights = weights
        self.prefix_sums = np.cumsum(weights)
        self.rng_seed = seed

    @property
    def total(self):
        return float(self.prefix_sums[-1])

    @property
    def n(self):
        return self.weights.shape[0]

    def probabilities(self):
        return self.weights / self.total

    def draw(self, rng, size):
        """Draw `size` column indices at once."""
        u = rng.random(size) * self.total
        return np.minimum(np.searchsorted(self.prefix_sums, u, side="right"), self.n - 1)


def sample_column(dist, rng):
    return int(dist.draw(rng, 1)[0])
