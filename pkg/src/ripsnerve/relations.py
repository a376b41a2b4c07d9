"""Binary relations and their column/row (Dowker) complexes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .complex import SimplicialComplex
from .homology import BettiTable, PrimeField, as_field, betti_numbers


@dataclass(frozen=True)
class BinaryRelation:
    """Incidences ``(row, col)`` of a relation between two finite index sets."""

    n_rows: int
    n_cols: int
    incidences: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n_rows < 0 or self.n_cols < 0:
            raise ValueError("relation dimensions must be non-negative")
        for r, c in self.incidences:
            if not (0 <= r < self.n_rows and 0 <= c < self.n_cols):
                raise ValueError(f"incidence ({r}, {c}) outside {self.n_rows}x{self.n_cols}")

    @classmethod
    def from_pairs(cls, n_rows: int, n_cols: int, pairs: Iterable[tuple[int, int]]) -> "BinaryRelation":
        return cls(n_rows, n_cols, frozenset((int(r), int(c)) for r, c in pairs))

    @classmethod
    def from_dense(cls, matrix) -> "BinaryRelation":
        m = np.asarray(matrix)
        if m.ndim != 2:
            raise ValueError("dense relation must be a 2-d 0/1 array")
        if not np.isin(m, (0, 1)).all():
            raise ValueError("dense relation entries must be 0 or 1")
        rows, cols = np.nonzero(m)
        return cls.from_pairs(m.shape[0], m.shape[1], zip(rows.tolist(), cols.tolist()))

    @classmethod
    def random(cls, n_rows: int, n_cols: int, density: float, rng: np.random.Generator) -> "BinaryRelation":
        return cls.from_dense((rng.random((n_rows, n_cols)) < density).astype(int))

    def to_dense(self) -> np.ndarray:
        m = np.zeros((self.n_rows, self.n_cols), dtype=int)
        for r, c in self.incidences:
            m[r, c] = 1
        return m

    def transpose(self) -> "BinaryRelation":
        return BinaryRelation(self.n_cols, self.n_rows, frozenset((c, r) for r, c in self.incidences))

    def row_sets(self) -> list[frozenset[int]]:
        rows: list[set[int]] = [set() for _ in range(self.n_rows)]
        for r, c in self.incidences:
            rows[r].add(c)
        return [frozenset(s) for s in rows]


def column_complex(R: BinaryRelation, max_dim: int) -> SimplicialComplex:
    """Sets of columns covered by a single row, face-closed and capped at ``max_dim``."""
    distinct = {s for s in R.row_sets() if s}
    return SimplicialComplex.from_simplices(sorted(tuple(sorted(s)) for s in distinct), max_dim=max_dim)


def row_complex(R: BinaryRelation, max_dim: int) -> SimplicialComplex:
    return column_complex(R.transpose(), max_dim)


def check_dowker_betti(
    R: BinaryRelation,
    max_degree: int,
    F: PrimeField | int = 2,
) -> tuple[BettiTable, BettiTable, bool]:
    """Betti tables of the column and row complexes and whether they agree."""
    F = as_field(F)
    cols = betti_numbers(column_complex(R, max_degree + 1), max_degree, F)
    rows = betti_numbers(row_complex(R, max_degree + 1), max_degree, F)
    return cols, rows, cols.agrees(rows)
