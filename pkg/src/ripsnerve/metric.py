"""Finite metric spaces and the complexes built from them.

Scale comparisons are exact: ``mode="open"`` keeps pairs with ``d < r`` and
``mode="closed"`` pairs with ``d <= r``.  No tolerance is applied, so a probe
at a boundary scale has to pass the computed double (``math.sqrt(3)`` and so
on).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from .complex import SimplicialComplex, clique_expand
from .covers import Cover, nerve
from .homology import PrimeField, as_field, betti_numbers
from .relations import BinaryRelation, column_complex

Mode = Literal["open", "closed"]

METRIC_TOL = 1e-9


class MetricError(ValueError):
    pass


def _check_mode(mode: str) -> None:
    if mode not in ("open", "closed"):
        raise ValueError(f"mode must be 'open' or 'closed', got {mode!r}")


def within(d, r: float, mode: Mode):
    """Elementwise scale test, exact."""
    return d < r if mode == "open" else d <= r


@dataclass(frozen=True, eq=False)
class FiniteMetric:
    d: np.ndarray

    def __post_init__(self):
        d = np.asarray(self.d, dtype=float)
        if d.ndim != 2 or d.shape[0] != d.shape[1]:
            raise MetricError(f"distance matrix must be square, got shape {d.shape}")
        object.__setattr__(self, "d", d)

    @property
    def n(self) -> int:
        return self.d.shape[0]

    @classmethod
    def from_points(cls, points) -> "FiniteMetric":
        """Euclidean metric of a point cloud (rows are points)."""
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        n = pts.shape[0]
        rows = pts.tolist()
        d = np.zeros((n, n))
        # math.dist is exactly rounded where numpy's sum-of-squares is not,
        # which matters for boundary scales such as sqrt(3) on a hexagon.
        for i in range(n):
            pi = rows[i]
            for j in range(i + 1, n):
                d[i, j] = d[j, i] = math.dist(pi, rows[j])
        return cls(d)

    def validate(self, tol: float = METRIC_TOL) -> "FiniteMetric":
        d = self.d
        if not np.isfinite(d).all():
            raise MetricError("distances must be finite")
        if (d < 0).any():
            i, j = map(int, np.argwhere(d < 0)[0])
            raise MetricError(f"negative distance d({i},{j}) = {d[i, j]}")
        if (np.diag(d) != 0).any():
            i = int(np.flatnonzero(np.diag(d) != 0)[0])
            raise MetricError(f"d({i},{i}) = {d[i, i]} is not zero")
        if not np.array_equal(d, d.T):
            i, j = map(int, np.argwhere(d != d.T)[0])
            raise MetricError(f"asymmetric: d({i},{j}) = {d[i, j]} but d({j},{i}) = {d[j, i]}")
        for k in range(self.n):
            bad = d > d[:, [k]] + d[[k], :] + tol
            if bad.any():
                i, j = map(int, np.argwhere(bad)[0])
                raise MetricError(f"triangle inequality fails: d({i},{j}) > d({i},{k}) + d({k},{j})")
        return self

    def restrict(self, idx: Sequence[int]) -> "FiniteMetric":
        idx = np.asarray(list(idx), dtype=int)
        return FiniteMetric(self.d[np.ix_(idx, idx)])

    def threshold_edges(self, r: float, mode: Mode) -> list[tuple[int, int]]:
        _check_mode(mode)
        iu, ju = np.nonzero(np.triu(within(self.d, r, mode), k=1))
        return list(zip(iu.tolist(), ju.tolist()))


def rips(X: FiniteMetric, r: float, mode: Mode = "open", max_dim: int = 2) -> SimplicialComplex:
    """Flag complex of the ``d < r`` (open) or ``d <= r`` (closed) graph."""
    if not r > 0:
        raise ValueError(f"scale must be positive, got {r}")
    return clique_expand(X.threshold_edges(r, mode), range(X.n), max_dim)


def witness_relation(X: FiniteMetric, landmarks: Sequence[int], r: float, mode: Mode) -> BinaryRelation:
    """Rows are all points of X, columns the landmarks; (y, j) when y lies in the ball at landmark j."""
    _check_mode(mode)
    hits = within(X.d[:, list(landmarks)], r, mode)
    rows, cols = np.nonzero(hits)
    return BinaryRelation.from_pairs(X.n, len(landmarks), zip(rows.tolist(), cols.tolist()))


def cech_ambient(
    X: FiniteMetric,
    landmarks: Sequence[int] | None,
    r: float,
    mode: Mode = "open",
    max_dim: int = 2,
) -> SimplicialComplex:
    """Landmark sets whose balls share a witness point of X; vertices are point ids."""
    if not r > 0:
        raise ValueError(f"scale must be positive, got {r}")
    landmarks = list(range(X.n)) if landmarks is None else [int(a) for a in landmarks]
    if not landmarks:
        raise ValueError("landmarks must be non-empty")
    if len(set(landmarks)) != len(landmarks):
        raise ValueError("landmarks must be distinct")
    c = column_complex(witness_relation(X, landmarks, r, mode), max_dim)
    return c.relabel(landmarks)


def ball_cover(X: FiniteMetric, r: float, mode: Mode = "open") -> Cover:
    """Member a is the (open or closed) r-ball around point a, intersected with X."""
    _check_mode(mode)
    hits = within(X.d, r, mode)
    return Cover.of(X.n, (np.flatnonzero(row).tolist() for row in hits))


def maximal_cliques(adj: dict[int, set[int]]) -> list[tuple[int, ...]]:
    """Bron-Kerbosch with Tomita pivoting, iterative; cliques sorted."""
    out: list[tuple[int, ...]] = []
    stack: list[tuple[list[int], set[int], set[int]]] = [([], set(adj), set())]
    while stack:
        R, P, X = stack.pop()
        if not P:
            if not X:
                out.append(tuple(sorted(R)))
            continue
        pivot = max(P | X, key=lambda u: len(P & adj[u]))
        for v in sorted(P - adj[pivot]):
            stack.append((R + [v], P & adj[v], X & adj[v]))
            P = P - {v}
            X = X | {v}
    return sorted(out)


def diameter_cover(X: FiniteMetric, r: float, mode: Mode = "open") -> Cover:
    """Maximal subsets of diameter < r (open) or <= r (closed)."""
    if not r > 0:
        raise ValueError(f"scale must be positive, got {r}")
    adj: dict[int, set[int]] = {i: set() for i in range(X.n)}
    for i, j in X.threshold_edges(r, mode):
        adj[i].add(j)
        adj[j].add(i)
    return Cover.of(X.n, maximal_cliques(adj))


def verify_rips_nerve(
    X: FiniteMetric,
    r: float,
    mode: Mode = "open",
    max_degree: int = 2,
    F: PrimeField | int = 2,
) -> bool:
    """Betti numbers of the Rips complex and of the diameter-cover nerve agree."""
    F = as_field(F)
    left = betti_numbers(rips(X, r, mode, max_degree + 1), max_degree, F)
    right = betti_numbers(nerve(diameter_cover(X, r, mode), max_degree + 1), max_degree, F)
    return left.agrees(right)


def hexagon_points(side: float = 1.0) -> np.ndarray:
    """Vertices of a regular planar hexagon, in cyclic order."""
    h = side * math.sqrt(3) / 2
    return np.array([(side, 0.0), (side / 2, h), (-side / 2, h), (-side, 0.0), (-side / 2, -h), (side / 2, -h)])


def hexagon(side: float = 1.0) -> FiniteMetric:
    return FiniteMetric.from_points(hexagon_points(side))


def random_planar(n: int, rng: np.random.Generator, scale: float = 1.0) -> FiniteMetric:
    return FiniteMetric.from_points(rng.random((n, 2)) * scale)

