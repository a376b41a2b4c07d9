"""Simplicial homology over prime fields.

Everything goes through one reducer: left-to-right column reduction with
lowest-one pivots.  The compiled kernel (``ripsnerve._reduce``) is used when
it was built; otherwise the pure-Python version in ``_reduce_py``.  Setting
``RIPSNERVE_PURE=1`` forces the fallback.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import _reduce_py
from .complex import Simplex, SimplicialComplex, TruncatedComplexError

ReduceFn = Callable[[Sequence[int], Sequence[int], Sequence[int], int, int], list]

try:
    if os.environ.get("RIPSNERVE_PURE"):
        raise ImportError("pure-Python kernel requested")
    from ._reduce import reduce_lows as _compiled_reduce
except ImportError:
    _compiled_reduce = None

BACKEND = "cython" if _compiled_reduce is not None else "python"
_reduce: ReduceFn = _compiled_reduce or _reduce_py.reduce_lows


def kernel(name: str | None = None) -> ReduceFn:
    """Return a reduction kernel by name (``"cython"`` or ``"python"``)."""
    if name is None:
        return _reduce
    if name == "python":
        return _reduce_py.reduce_lows
    if name == "cython":
        if _compiled_reduce is None:
            raise RuntimeError("compiled kernel not available; rebuild with Cython")
        return _compiled_reduce
    raise ValueError(f"unknown kernel {name!r}")


class NotASubcomplexError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int = 2

    def __post_init__(self):
        if not _is_prime(int(self.p)):
            raise ValueError(f"{self.p} is not prime")

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return pow(a, -1, self.p)

    def __str__(self) -> str:
        return f"GF({self.p})"


def as_field(F: PrimeField | int) -> PrimeField:
    return F if isinstance(F, PrimeField) else PrimeField(int(F))


@dataclass(frozen=True)
class BoundaryMatrix:
    """Sparse boundary matrix in compressed-column form."""

    degree: int
    field: PrimeField
    rows: tuple[Simplex, ...]
    cols: tuple[Simplex, ...]
    indptr: np.ndarray
    indices: np.ndarray
    data: np.ndarray

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def column(self, j: int) -> dict[int, int]:
        lo, hi = self.indptr[j], self.indptr[j + 1]
        return dict(zip(self.indices[lo:hi].tolist(), self.data[lo:hi].tolist()))

    def to_dense(self) -> np.ndarray:
        out = np.zeros(self.shape, dtype=np.int64)
        for j in range(len(self.cols)):
            for r, v in self.column(j).items():
                out[r, j] = v
        return out

    def lows(self, kernel_name: str | None = None) -> list[int]:
        return kernel(kernel_name)(self.indptr, self.indices, self.data, len(self.rows), self.field.p)

    def rank(self, kernel_name: str | None = None) -> int:
        return sum(1 for low in self.lows(kernel_name) if low >= 0)


def _assemble(rows: Sequence[Simplex], cols: Sequence[Simplex], k: int, F: PrimeField) -> BoundaryMatrix:
    row_pos = {s: i for i, s in enumerate(rows)}
    p = F.p
    indptr = np.zeros(len(cols) + 1, dtype=np.int64)
    indices = np.empty(len(cols) * (k + 1), dtype=np.int64)
    data = np.empty(len(cols) * (k + 1), dtype=np.int64)
    t = 0
    for j, s in enumerate(cols):
        entries = []
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            try:
                entries.append((row_pos[face], 1 if i % 2 == 0 else p - 1))
            except KeyError:
                raise ValueError(f"face {face} of {s} missing: complex is not face-closed") from None
        entries.sort()
        for r, v in entries:
            indices[t] = r
            data[t] = v % p
            t += 1
        indptr[j + 1] = t
    return BoundaryMatrix(k, F, tuple(rows), tuple(cols), indptr, indices[:t], data[:t])


def boundary_matrix(c: SimplicialComplex, k: int, F: PrimeField | int = 2) -> BoundaryMatrix:
    """Matrix of the boundary map from k-chains to (k-1)-chains.

    Rows and columns follow the canonical simplex order of ``c``; the column
    of a k-simplex has ``(-1)**i`` on the facet that drops its i-th vertex.
    """
    if k < 1:
        raise ValueError(f"boundary degree must be >= 1, got {k}")
    F = as_field(F)
    return _assemble(c.of_dim(k - 1), c.of_dim(k), k, F)


@dataclass(frozen=True)
class BettiTable:
    betti: tuple[int, ...]
    field: PrimeField

    def __getitem__(self, k: int) -> int:
        return self.betti[k]

    def __len__(self) -> int:
        return len(self.betti)

    def euler(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti))

    def to_tsv(self, header: bool = False) -> str:
        lines = ["degree\tbetti\tfield"] if header else []
        lines += [f"{k}\t{b}\t{self.field.p}" for k, b in enumerate(self.betti)]
        return "\n".join(lines) + "\n"

    def agrees(self, other: "BettiTable") -> bool:
        return self.betti == other.betti


def _require_complete(c: SimplicialComplex, top: int, what: str) -> None:
    if c.truncation_dim is not None and c.truncation_dim < top:
        raise TruncatedComplexError(
            f"{what} needs simplices through dimension {top}, complex truncated at {c.truncation_dim}"
        )


def betti_numbers(c: SimplicialComplex, max_degree: int, F: PrimeField | int = 2) -> BettiTable:
    """b_k = dim ker d_k - rank d_{k+1} for 0 <= k <= max_degree."""
    F = as_field(F)
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    _require_complete(c, max_degree + 1, f"H_{max_degree}")
    ranks = [0] * (max_degree + 3)
    for k in range(1, max_degree + 2):
        if c.of_dim(k) and c.of_dim(k - 1):
            ranks[k] = boundary_matrix(c, k, F).rank()
    betti = tuple(len(c.of_dim(k)) - ranks[k] - ranks[k + 1] for k in range(max_degree + 1))
    return BettiTable(betti, F)


def inclusion_rank(
    a: SimplicialComplex,
    b: SimplicialComplex,
    k: int,
    F: PrimeField | int = 2,
) -> int:
    """Rank of H_k(a) -> H_k(b) induced by the inclusion of ``a`` in ``b``.

    Simplices of ``a`` are placed before those of ``b`` minus ``a`` and the
    boundary of degree k+1 is reduced in that order.  Classes born in ``a``
    that are never the pivot of a reduced column survive into ``b``.
    """
    F = as_field(F)
    if k < 0:
        raise ValueError("degree must be non-negative")
    _require_complete(a, k + 1, f"H_{k} of the subcomplex")
    _require_complete(b, k + 1, f"H_{k} of the ambient complex")
    for s in a:
        if s not in b:
            raise NotASubcomplexError(f"simplex {s} of the first complex is missing from the second")

    a_k = a.of_dim(k)
    if not a_k:
        return 0
    cycles_a = len(a_k)
    if k >= 1 and a.of_dim(k - 1):
        cycles_a -= boundary_matrix(a, k, F).rank()

    rows = _two_step_order(a_k, b.of_dim(k))
    cols = _two_step_order(a.of_dim(k + 1), b.of_dim(k + 1))
    if not cols:
        return cycles_a
    lows = _assemble(rows, cols, k + 1, F).lows()
    killed = sum(1 for low in lows if 0 <= low < len(a_k))
    return cycles_a - killed


def _two_step_order(first: Sequence[Simplex], full: Sequence[Simplex]) -> list[Simplex]:
    seen = set(first)
    return list(first) + [s for s in full if s not in seen]
