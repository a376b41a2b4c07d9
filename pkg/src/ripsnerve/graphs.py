"""Metric graphs: shortest loop length, dense sampling, reconstruction scans.

Whether a sampled complex "matches" the graph is decided on b_0 and b_1.
That is sound for this class: a connected graph is homotopy equivalent to a
wedge of circles, and its homotopy type is fixed by the cycle rank, which the
Betti numbers over any field recover.

Sample distances are computed in exact rational arithmetic and rounded to
float once, so a point pair at geodesic distance exactly 1 gets the double
``1.0`` and sits on the right side of an exact scale comparison.
"""

from __future__ import annotations

import heapq
import logging
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .complex import SimplicialComplex
from .homology import BettiTable, PrimeField, as_field, betti_numbers
from .metric import FiniteMetric, Mode, cech_ambient, rips

log = logging.getLogger(__name__)


def _exact(x) -> Fraction:
    # decimal reading of the float, so 0.1 means 1/10
    return x if isinstance(x, Fraction) else Fraction(repr(float(x)))


@dataclass(frozen=True)
class MetricGraph:
    """Connected multigraph with positive edge lengths; loops and parallel edges allowed."""

    vertex_count: int
    edges: tuple[tuple[int, int, float], ...]

    def __post_init__(self):
        edges = tuple((int(u), int(v), float(w)) for u, v, w in self.edges)
        object.__setattr__(self, "edges", edges)
        for u, v, w in edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) uses a vertex outside 0..{self.vertex_count - 1}")
            if not w > 0 or not math.isfinite(w):
                raise ValueError(f"edge ({u}, {v}) has non-positive length {w}")
        if self.vertex_count < 1:
            raise ValueError("a metric graph needs at least one vertex")
        if not self._connected():
            raise ValueError("metric graph must be connected")

    @classmethod
    def of(cls, edges: Iterable[tuple[int, int, float]], vertex_count: int | None = None) -> "MetricGraph":
        edges = tuple(edges)
        if vertex_count is None:
            vertex_count = 1 + max((max(u, v) for u, v, _ in edges), default=0)
        return cls(vertex_count, edges)

    def _connected(self) -> bool:
        parent = list(range(self.vertex_count))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v, _ in self.edges:
            parent[find(u)] = find(v)
        return len({find(x) for x in range(self.vertex_count)}) == 1

    @property
    def cycle_rank(self) -> int:
        return len(self.edges) - self.vertex_count + 1

    def expected_betti(self, max_degree: int = 1) -> tuple[int, ...]:
        return (1, self.cycle_rank, *([0] * (max_degree - 1)))[: max_degree + 1]


def cycle_graph(circumference: float, n_edges: int = 1) -> MetricGraph:
    """A single circle; ``n_edges=1`` gives one vertex with a self-loop."""
    w = circumference / n_edges
    return MetricGraph.of([(i, (i + 1) % n_edges, w) for i in range(n_edges)], n_edges)


def _dijkstra(adj: Sequence[list[tuple[int, object, int]]], source: int, skip_edge: int = -1, zero=0.0):
    dist = [None] * len(adj)
    dist[source] = zero
    heap = [(zero, source)]
    while heap:
        d, u = heapq.heappop(heap)
        if d != dist[u]:
            continue
        for v, w, eid in adj[u]:
            if eid == skip_edge:
                continue
            nd = d + w
            if dist[v] is None or nd < dist[v]:
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    return dist


def shortest_loop_length(G: MetricGraph) -> float:
    """Weighted girth: the length of the shortest non-contractible loop, inf for trees."""
    best = math.inf
    adj: list[list[tuple[int, float, int]]] = [[] for _ in range(G.vertex_count)]
    for eid, (u, v, w) in enumerate(G.edges):
        if u == v:
            best = min(best, w)
            continue
        adj[u].append((v, w, eid))
        adj[v].append((u, w, eid))
    # parallel edges: the two shortest copies between a vertex pair
    parallel: dict[tuple[int, int], list[float]] = {}
    for u, v, w in G.edges:
        if u != v:
            parallel.setdefault((min(u, v), max(u, v)), []).append(w)
    for ws in parallel.values():
        if len(ws) >= 2:
            a, b = sorted(ws)[:2]
            best = min(best, a + b)
    # simple cycles of length >= 3 vertices: an edge plus the shortest detour
    for eid, (u, v, w) in enumerate(G.edges):
        if u == v:
            continue
        dv = _dijkstra(adj, u, skip_edge=eid)[v]
        if dv is not None:
            best = min(best, w + dv)
    return best


@dataclass(frozen=True, eq=False)
class SampledSpace:
    source: MetricGraph
    delta: float
    locations: tuple[tuple[int, Fraction], ...]
    """Per sample point: (edge index or -1 for a graph vertex, arc offset from the edge's first end)."""
    dist: FiniteMetric

    @property
    def n(self) -> int:
        return self.dist.n


def sample(G: MetricGraph, delta: float) -> SampledSpace:
    """Subdivide every edge of length L into ceil(L/delta) equal arcs.

    Points are the graph vertices (ids 0..V-1) followed by interior points,
    edge by edge.  Distances are shortest paths on the subdivided graph.
    """
    if not delta > 0:
        raise ValueError(f"spacing must be positive, got {delta}")
    step = _exact(delta)
    locations: list[tuple[int, Fraction]] = [(-1, Fraction(0))] * G.vertex_count
    adj: list[list[tuple[int, Fraction, int]]] = [[] for _ in range(G.vertex_count)]

    def link(a: int, b: int, w: Fraction) -> None:
        eid = len(link_ids)
        link_ids.append(eid)
        adj[a].append((b, w, eid))
        adj[b].append((a, w, eid))

    link_ids: list[int] = []
    for eid, (u, v, w) in enumerate(G.edges):
        L = _exact(w)
        m = max(1, math.ceil(L / step))
        arc = L / m
        prev = u
        for i in range(1, m):
            locations.append((eid, arc * i))
            adj.append([])
            cur = len(locations) - 1
            link(prev, cur, arc)
            prev = cur
        link(prev, v, arc)

    n = len(locations)
    exact = [_dijkstra(adj, s, zero=Fraction(0)) for s in range(n)]
    d = np.array([[float(x) for x in row] for row in exact])
    d = np.minimum(d, d.T)
    return SampledSpace(G, float(delta), tuple(locations), FiniteMetric(d))


@dataclass(frozen=True)
class ScanRow:
    scale: float
    betti: BettiTable
    matches: bool
    f_vector: tuple[int, ...] = ()


def _scan(
    G: MetricGraph,
    delta: float,
    scales: Sequence[float],
    build: Callable[[FiniteMetric, float, int], SimplicialComplex],
    F: PrimeField | int,
    max_degree: int,
    space: SampledSpace | None = None,
) -> list[ScanRow]:
    F = as_field(F)
    scales = [float(s) for s in scales]
    if any(not s > 0 for s in scales):
        raise ValueError("scales must be positive")
    if scales and delta > min(scales) / 4:
        warnings.warn(
            f"spacing {delta} is coarse relative to the smallest scale {min(scales)} (want <= scale/4)",
            stacklevel=3,
        )
    space = space or sample(G, delta)
    expected = G.expected_betti(max_degree)
    rows = []
    for r in scales:
        c = build(space.dist, r, max_degree + 1)
        b = betti_numbers(c, max_degree, F)
        rows.append(ScanRow(r, b, b.betti == expected, tuple(len(g) for g in c.simplices)))
        log.debug("scale %s: betti %s", r, b.betti)
    return rows


def reconstruction_scan(
    G: MetricGraph,
    delta: float,
    scales: Sequence[float],
    mode: Mode = "open",
    F: PrimeField | int = 2,
    max_degree: int = 1,
    space: SampledSpace | None = None,
) -> list[ScanRow]:
    """Rips Betti numbers of a dense sample at each scale, against the graph's own."""
    return _scan(G, delta, scales, lambda X, r, md: rips(X, r, mode, md), F, max_degree, space)


def cech_scan(
    G: MetricGraph,
    delta: float,
    scales: Sequence[float],
    mode: Mode = "open",
    F: PrimeField | int = 2,
    max_degree: int = 1,
    space: SampledSpace | None = None,
) -> list[ScanRow]:
    """As :func:`reconstruction_scan` with the ambient Cech complex of the sample."""
    return _scan(G, delta, scales, lambda X, r, md: cech_ambient(X, None, r, mode, md), F, max_degree, space)
