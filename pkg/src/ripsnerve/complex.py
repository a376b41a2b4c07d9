"""Finite abstract simplicial complexes.

Simplices are tuples of strictly increasing non-negative integers.  A
:class:`SimplicialComplex` keeps them grouped by dimension, each group sorted
lexicographically, which is the canonical order used by every other module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

Simplex = tuple[int, ...]


class TruncatedComplexError(ValueError):
    """Raised when an answer depends on simplices a dimension cap left out."""


def as_simplex(vertices: Iterable[int]) -> Simplex:
    s = tuple(sorted(int(v) for v in vertices))
    if not s:
        raise ValueError("a simplex needs at least one vertex")
    if any(a == b for a, b in zip(s, s[1:])):
        raise ValueError(f"repeated vertex in {s}")
    if s[0] < 0:
        raise ValueError(f"negative vertex id in {s}")
    return s


def faces(s: Simplex, max_dim: int | None = None) -> Iterator[Simplex]:
    """All non-empty faces of ``s`` (including ``s``) up to ``max_dim``."""
    top = len(s) if max_dim is None else min(len(s), max_dim + 1)
    for size in range(1, top + 1):
        yield from combinations(s, size)


def facets_of(s: Simplex) -> list[Simplex]:
    """Codimension-one faces, the i-th one dropping vertex i."""
    return [s[:i] + s[i + 1:] for i in range(len(s))]


@dataclass(frozen=True, eq=False)
class SimplicialComplex:
    """Face-closed complex, immutable once built.

    ``truncation_dim`` is set when construction stopped at a dimension cap
    while larger simplices existed; everything of dimension
    ``<= truncation_dim`` is present, nothing above it is.
    """

    simplices: tuple[tuple[Simplex, ...], ...]
    truncation_dim: int | None = None
    _index: list = field(default_factory=list, repr=False, compare=False)

    @classmethod
    def from_simplices(
        cls,
        simplices: Iterable[Iterable[int]],
        max_dim: int | None = None,
        truncated: bool | None = None,
    ) -> "SimplicialComplex":
        """Face-close ``simplices``, dropping everything above ``max_dim``.

        ``truncated`` overrides the automatic detection (a simplex of
        dimension above ``max_dim`` was supplied).
        """
        groups: dict[int, set[Simplex]] = {}
        cut = False
        for raw in simplices:
            s = as_simplex(raw)
            if max_dim is not None and len(s) - 1 > max_dim:
                cut = True
            for f in faces(s, max_dim):
                groups.setdefault(len(f) - 1, set()).add(f)
        if truncated is not None:
            cut = truncated
        return cls._from_groups(groups, max_dim if cut else None)

    @classmethod
    def _from_groups(cls, groups: Mapping[int, Iterable[Simplex]], truncation_dim: int | None) -> "SimplicialComplex":
        top = max((d for d, g in groups.items() if g), default=-1)
        simplices = tuple(tuple(sorted(groups.get(d, ()))) for d in range(top + 1))
        return cls(simplices, truncation_dim)

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        return cls(())

    # --- queries -------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.simplices) - 1

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(s[0] for s in self.simplices[0]) if self.simplices else ()

    @property
    def vertex_count(self) -> int:
        return len(self.simplices[0]) if self.simplices else 0

    @property
    def is_truncated(self) -> bool:
        return self.truncation_dim is not None

    def of_dim(self, k: int) -> tuple[Simplex, ...]:
        if 0 <= k < len(self.simplices):
            return self.simplices[k]
        return ()

    def index(self, k: int) -> dict[Simplex, int]:
        """Position of each k-simplex in the canonical order."""
        while len(self._index) <= k:
            self._index.append(None)
        if self._index[k] is None:
            self._index[k] = {s: i for i, s in enumerate(self.of_dim(k))}
        return self._index[k]

    def __contains__(self, s: object) -> bool:
        if not isinstance(s, tuple) or not s:
            return False
        return s in self.index(len(s) - 1)

    def __iter__(self) -> Iterator[Simplex]:
        for group in self.simplices:
            yield from group

    def __len__(self) -> int:
        return sum(len(g) for g in self.simplices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.simplices == other.simplices and self.truncation_dim == other.truncation_dim

    def __hash__(self) -> int:
        return hash((self.simplices, self.truncation_dim))

    def same_simplices(self, other: "SimplicialComplex") -> bool:
        """Simplex-for-simplex equality, ignoring truncation bookkeeping."""
        return self.simplices == other.simplices

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return all(s in other for s in self)

    def skeleton(self, k: int) -> "SimplicialComplex":
        trunc = k if self.dim > k or self.is_truncated else None
        if self.truncation_dim is not None and self.truncation_dim < k:
            trunc = self.truncation_dim
        return SimplicialComplex(self.simplices[: k + 1], trunc)

    def facets(self) -> list[Simplex]:
        """Maximal simplices, in canonical order."""
        covered: set[Simplex] = set()
        for group in self.simplices[1:]:
            for s in group:
                covered.update(facets_of(s))
        return [s for s in self if s not in covered]

    def relabel(self, mapping: Sequence[int] | Mapping[int, int]) -> "SimplicialComplex":
        """Apply an injective vertex relabelling ``v -> mapping[v]``."""
        groups: dict[int, list[Simplex]] = {}
        for k, group in enumerate(self.simplices):
            groups[k] = [tuple(sorted(mapping[v] for v in s)) for s in group]
        return SimplicialComplex._from_groups(groups, self.truncation_dim)


def insert_simplex(c: SimplicialComplex, s: Iterable[int]) -> SimplicialComplex:
    """Return ``c`` with ``s`` and all of its faces added."""
    s = as_simplex(s)
    groups = {k: set(g) for k, g in enumerate(c.simplices)}
    for f in faces(s):
        groups.setdefault(len(f) - 1, set()).add(f)
    return SimplicialComplex._from_groups(groups, c.truncation_dim)


def clique_expand(
    graph_edges: Iterable[Iterable[int]],
    vertices: Iterable[int],
    max_dim: int,
) -> SimplicialComplex:
    """Flag complex of a graph, built incrementally up to ``max_dim``.

    Each clique is extended only by common neighbours with a larger id, so
    every clique is produced exactly once.  ``truncation_dim`` is set to
    ``max_dim`` when some clique of ``max_dim + 2`` vertices exists.
    """
    if max_dim < 0:
        raise ValueError("max_dim must be non-negative")
    verts = sorted(set(int(v) for v in vertices))
    upper: dict[int, set[int]] = {v: set() for v in verts}
    for e in graph_edges:
        e = tuple(int(x) for x in e)
        if len(e) != 2 or e[0] == e[1]:
            raise ValueError(f"not an edge: {e}")
        u, v = min(e), max(e)
        if u not in upper or v not in upper:
            raise ValueError(f"edge {e} uses a vertex outside the vertex set")
        upper[u].add(v)

    groups: list[list[Simplex]] = [[] for _ in range(max_dim + 1)]
    truncated = False
    stack: list[tuple[Simplex, set[int]]] = [((v,), upper[v]) for v in reversed(verts)]
    while stack:
        clique, common = stack.pop()
        groups[len(clique) - 1].append(clique)
        if not common:
            continue
        if len(clique) - 1 == max_dim:
            truncated = True
            continue
        for w in sorted(common, reverse=True):
            stack.append((clique + (w,), common & upper[w]))
    while groups and not groups[-1]:
        groups.pop()
    return SimplicialComplex(tuple(tuple(sorted(g)) for g in groups), max_dim if truncated else None)


def f_vector(c: SimplicialComplex) -> tuple[int, ...]:
    return tuple(len(g) for g in c.simplices)


def euler_characteristic(c: SimplicialComplex) -> int:
    if c.is_truncated:
        raise TruncatedComplexError(
            f"Euler characteristic of a complex truncated at dimension {c.truncation_dim} is undefined"
        )
    return sum((-1) ** k * n for k, n in enumerate(f_vector(c)))
