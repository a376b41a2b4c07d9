"""Point-cloud fixtures shared by the nested-extraction tests and the golden generator."""

import numpy as np

from ripsnerve.graphs import cycle_graph, sample
from ripsnerve.metric import FiniteMetric
from ripsnerve.nested import example_space


def geodesic_circle():
    # 60 evenly spaced points, intrinsic distances, circumference 3
    return sample(cycle_graph(3.0), 0.05).dist


def noisy_circle(seed=9, n=150, sigma=0.12):
    rng = np.random.default_rng(seed)
    theta = rng.uniform(0, 2 * np.pi, n)
    rad = 1 + rng.normal(0, sigma, n)
    return FiniteMetric.from_points(np.c_[rad * np.cos(theta), rad * np.sin(theta)])


def two_circles():
    t = np.linspace(0, 2 * np.pi, 30, endpoint=False)
    ring = np.c_[np.cos(t), np.sin(t)]
    return FiniteMetric.from_points(np.vstack([ring, ring + [10.0, 0.0]]))


# name -> (metric builder, r, eps1, eps2, degrees)
NESTED = {
    "circle": (geodesic_circle, 0.9, 0.3, 0.15, (0, 1)),
    "example_space": (lambda: example_space(0.05, 4.0, 10), 1.2, 0.3, 0.15, (0, 1)),
    "noisy_circle": (noisy_circle, 0.6, 0.28, 0.1, (0, 1)),
    "two_circles": (two_circles, 0.9, 0.3, 0.15, (0, 1)),
}
