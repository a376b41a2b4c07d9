"""Homology from two nested finite samples at a single Rips scale.

Given samples X1 ⊆ X2 of a space and a scale r, the rank of
H_k(Rips(X1, r)) -> H_k(Rips(X2, r)) estimates H_k of the space.  Whether the
scale is a good one (a good cover of diameter-r sets exists) cannot be
checked from finite data; callers choose r and interpret the rank.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .complex import SimplicialComplex
from .homology import PrimeField, as_field, inclusion_rank
from .metric import FiniteMetric, Mode, rips


@dataclass(frozen=True, eq=False)
class NestedSamplePair:
    ambient: FiniteMetric
    idx1: tuple[int, ...]
    idx2: tuple[int, ...]
    scale: float
    mode: Mode = "open"

    def __post_init__(self):
        if not set(self.idx1) <= set(self.idx2):
            raise ValueError("first sample must be contained in the second")
        if any(not 0 <= i < self.ambient.n for i in self.idx2):
            raise ValueError("sample index outside the ambient space")


def greedy_net(d: np.ndarray, eps: float, start: tuple[int, ...] = (), seed: int = 0) -> tuple[int, ...]:
    """Extend ``start`` to a maximal eps-separated set.

    Points are scanned in index order beginning at ``seed`` (wrapping
    around); a point joins when it is at distance >= eps from every chosen
    point.  Every point ends up within < eps of the net.
    """
    n = d.shape[0]
    chosen = list(start)
    nearest = np.full(n, np.inf)
    for c in chosen:
        nearest = np.minimum(nearest, d[c])
    for off in range(n):
        i = (seed + off) % n
        if nearest[i] >= eps:
            chosen.append(i)
            nearest = np.minimum(nearest, d[i])
    return tuple(chosen)


def select_nested_samples(
    ambient: FiniteMetric,
    r: float,
    eps1: float,
    eps2: float,
    mode: Mode = "open",
    seed: int = 0,
) -> NestedSamplePair:
    """A coarse eps1-net and its extension to a finer eps2-net."""
    if not (0 < eps2 <= eps1 < r / 2):
        raise ValueError(f"need 0 < eps2 <= eps1 < r/2, got eps1={eps1}, eps2={eps2}, r={r}")
    if ambient.n == 0:
        raise ValueError("ambient space is empty")
    idx1 = greedy_net(ambient.d, eps1, seed=seed % ambient.n)
    idx2 = greedy_net(ambient.d, eps2, start=idx1, seed=seed % ambient.n)
    return NestedSamplePair(ambient, idx1, idx2, float(r), mode)


@dataclass(frozen=True)
class Extraction:
    rank: int
    degree: int
    field: PrimeField
    small: SimplicialComplex
    large: SimplicialComplex

    def provenance(self, pair: NestedSamplePair) -> dict:
        return {
            "rank": self.rank,
            "degree": self.degree,
            "prime": self.field.p,
            "scale": pair.scale,
            "mode": pair.mode,
            "net_sizes": [len(pair.idx1), len(pair.idx2)],
            "f_vector_small": [len(g) for g in self.small.simplices],
            "f_vector_large": [len(g) for g in self.large.simplices],
            "truncated_small": self.small.truncation_dim,
            "truncated_large": self.large.truncation_dim,
        }


def sample_complexes(pair: NestedSamplePair, max_dim: int) -> tuple[SimplicialComplex, SimplicialComplex]:
    """Rips complexes of both samples, vertices labelled by ambient index."""
    out = []
    for idx in (pair.idx1, pair.idx2):
        order = sorted(idx)
        c = rips(pair.ambient.restrict(order), pair.scale, pair.mode, max_dim)
        out.append(c.relabel(order))
    return out[0], out[1]


def extract(pair: NestedSamplePair, k: int, F: PrimeField | int = 2, max_dim: int | None = None) -> Extraction:
    F = as_field(F)
    max_dim = k + 1 if max_dim is None else max_dim
    small, large = sample_complexes(pair, max_dim)
    assert small.is_subcomplex_of(large), "nested samples must give nested complexes"
    return Extraction(inclusion_rank(small, large, k, F), k, F, small, large)


def extract_homology(pair: NestedSamplePair, k: int, F: PrimeField | int = 2, max_dim: int | None = None) -> int:
    """Rank of the map on H_k induced by Rips(X1, r) ⊆ Rips(X2, r)."""
    return extract(pair, k, F, max_dim).rank


def example_space_points(eps: float, D: float, n: int) -> np.ndarray:
    """Planar sample of a gapped small circle, a segment, and a large circle.

    The small circle has diameter 1 and a gap of chord length ``eps`` on its
    far left; its rightmost point starts a horizontal segment of length 10
    whose other end lies on a circle of diameter ``D``.  Every piece is
    sampled at ``n`` points per unit length.
    """
    if not 0 < eps < 0.1:
        raise ValueError(f"gap must satisfy 0 < eps < 1/10, got {eps}")
    if not D > 3:
        raise ValueError(f"large diameter must exceed 3, got {D}")
    if n < 1:
        raise ValueError("density must be at least one point per unit length")

    pts: list[tuple[float, float]] = []
    # big circle, leftmost point at the origin
    R = D / 2
    m = math.ceil(math.pi * D * n)
    pts += [(R - R * math.cos(2 * math.pi * i / m), R * math.sin(2 * math.pi * i / m)) for i in range(m)]
    # segment from the origin to (-10, 0), both ends excluded
    m = math.ceil(10 * n)
    pts += [(-10 * i / m, 0.0) for i in range(1, m)]
    # small circle through (-10, 0), centre (-10.5, 0), gap around angle pi
    half_gap = math.asin(eps)  # chord 2 * 0.5 * sin(half_gap) = eps
    span = 2 * (math.pi - half_gap)
    m = math.ceil(0.5 * span * n)
    cx = -10.5
    for i in range(m + 1):
        phi = -span / 2 + span * i / m
        pts.append((cx + 0.5 * math.cos(phi), 0.5 * math.sin(phi)))
    return np.array(pts)


def example_space(eps: float, D: float, n: int) -> FiniteMetric:
    return FiniteMetric.from_points(example_space_points(eps, D, n))
