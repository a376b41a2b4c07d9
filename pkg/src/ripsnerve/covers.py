"""Covers of a finite universe, their nerve and Vietoris complexes.

The nerve and Vietoris builders here enumerate simplices directly (growing
member sets while a common point exists, resp. point sets while a common
member exists).  They deliberately do not go through ``relations`` so the
identities with the column/row complexes of the cover matrix are checked
along two independent routes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .complex import Simplex, SimplicialComplex
from .relations import BinaryRelation, column_complex, row_complex


@dataclass(frozen=True)
class Cover:
    """Indexed collection of subsets; duplicates and empty members are kept."""

    universe_size: int
    members: tuple[frozenset[int], ...]

    def __post_init__(self):
        for i, m in enumerate(self.members):
            for x in m:
                if not 0 <= x < self.universe_size:
                    raise ValueError(f"member {i} contains point {x} outside universe of size {self.universe_size}")

    @classmethod
    def of(cls, universe_size: int, members: Iterable[Iterable[int]]) -> "Cover":
        return cls(int(universe_size), tuple(frozenset(int(x) for x in m) for m in members))

    def __len__(self) -> int:
        return len(self.members)


def cover_matrix(U: Cover) -> BinaryRelation:
    """Relation with rows = points, columns = member indices."""
    return BinaryRelation.from_pairs(
        U.universe_size, len(U.members), ((x, i) for i, m in enumerate(U.members) for x in m)
    )


def _grow(
    labels: Sequence[int],
    reach: dict[int, frozenset[int]],
    max_dim: int,
) -> SimplicialComplex:
    # Depth-first growth of increasing label tuples; a tuple is kept while
    # the intersection of its labels' reach sets stays non-empty.
    groups: dict[int, list[Simplex]] = {}
    truncated = False
    stack: list[tuple[Simplex, frozenset[int], int]] = []
    for pos in range(len(labels) - 1, -1, -1):
        v = labels[pos]
        if reach[v]:
            stack.append(((v,), reach[v], pos))
    while stack:
        simplex, common, pos = stack.pop()
        groups.setdefault(len(simplex) - 1, []).append(simplex)
        for nxt in range(len(labels) - 1, pos, -1):
            w = labels[nxt]
            inter = common & reach[w]
            if not inter:
                continue
            if len(simplex) - 1 == max_dim:
                truncated = True
                break
            stack.append((simplex + (w,), inter, nxt))
    return SimplicialComplex._from_groups(groups, max_dim if truncated else None)


def nerve(U: Cover, max_dim: int) -> SimplicialComplex:
    """Member indices whose members share a point; empty members are not vertices."""
    reach = {i: m for i, m in enumerate(U.members)}
    return _grow(range(len(U.members)), reach, max_dim)


def vietoris(U: Cover, max_dim: int) -> SimplicialComplex:
    """Point sets contained in a single member."""
    containing: dict[int, set[int]] = {x: set() for x in range(U.universe_size)}
    for i, m in enumerate(U.members):
        for x in m:
            containing[x].add(i)
    reach = {x: frozenset(s) for x, s in containing.items()}
    return _grow(range(U.universe_size), reach, max_dim)


def verify_prop_identities(U: Cover, max_dim: int) -> bool:
    """Nerve equals the column complex and Vietoris equals the row complex of the cover matrix."""
    M = cover_matrix(U)
    return (
        nerve(U, max_dim) == column_complex(M, max_dim)
        and vietoris(U, max_dim) == row_complex(M, max_dim)
    )
