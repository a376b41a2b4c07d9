"""Pure-Python column reduction (fallback when the compiled kernel is absent).

Matrices arrive in compressed-column form: column ``j`` has row indices
``indices[indptr[j]:indptr[j+1]]`` (strictly increasing) and coefficients
``data[...]`` in ``1..p-1``.
"""

from __future__ import annotations

from typing import Sequence


def reduce_lows(
    indptr: Sequence[int],
    indices: Sequence[int],
    data: Sequence[int],
    n_rows: int,
    p: int,
) -> list[int]:
    """Left-to-right reduction; returns the pivot row of each column or -1."""
    indptr = [int(x) for x in indptr]
    indices = [int(x) for x in indices]
    if p == 2:
        return _reduce_gf2(indptr, indices, n_rows)
    data = [int(x) % p for x in data]
    return _reduce_gfp(indptr, indices, data, n_rows, p)


def _reduce_gf2(indptr: list[int], indices: list[int], n_rows: int) -> list[int]:
    # columns as int bitsets; the pivot is the highest set bit
    pivot_col: dict[int, int] = {}
    lows = []
    for j in range(len(indptr) - 1):
        col = 0
        for r in indices[indptr[j]:indptr[j + 1]]:
            col ^= 1 << r
        while col:
            low = col.bit_length() - 1
            other = pivot_col.get(low)
            if other is None:
                break
            col ^= other
        if col:
            low = col.bit_length() - 1
            pivot_col[low] = col
            lows.append(low)
        else:
            lows.append(-1)
    return lows


def _reduce_gfp(indptr: list[int], indices: list[int], data: list[int], n_rows: int, p: int) -> list[int]:
    pivot_col: dict[int, dict[int, int]] = {}
    lows = []
    for j in range(len(indptr) - 1):
        col = {r: v for r, v in zip(indices[indptr[j]:indptr[j + 1]], data[indptr[j]:indptr[j + 1]]) if v}
        low = max(col) if col else -1
        while low >= 0 and low in pivot_col:
            other = pivot_col[low]
            factor = col[low] * pow(other[low], -1, p) % p
            for r, v in other.items():
                nv = (col.get(r, 0) - factor * v) % p
                if nv:
                    col[r] = nv
                else:
                    col.pop(r, None)
            low = max(col) if col else -1
        if low >= 0:
            pivot_col[low] = col
        lows.append(low)
    return lows
