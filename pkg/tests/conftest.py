import numpy as np
import pytest


def random_fraction(rng, n):
    """Random fraction with coefficients in +-[0.1, 10] and distinct nodes."""
    mags = rng.uniform(0.1, 10.0, size=n + 1)
    signs = rng.choice([-1.0, 1.0], size=n + 1)
    nodes = np.sort(rng.uniform(-1.0, 1.0, size=n))
    while len(np.unique(nodes)) != n:
        nodes = np.sort(rng.uniform(-1.0, 1.0, size=n))
    from thielefrac import ContinuedFraction

    return ContinuedFraction(tuple(mags * signs), tuple(nodes))


def random_smooth_function(rng):
    """Well-scaled smooth target for greedy-construction trials."""
    c = rng.uniform(-2.0, 2.0, size=4)
    s = rng.uniform(0.5, 2.0)

    def f(x):
        x = np.asarray(x, dtype=float)
        return (
            c[0]
            + c[1] * np.sin(s * x)
            + c[2] * np.cos(0.7 * s * x)
            + c[3] * x * np.exp(0.3 * x)
        )

    return f


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
