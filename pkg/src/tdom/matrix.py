"""0/1 matrices: regions, breadth, t-restriction and inclusivity.

Indices are 0-based throughout; cell ``(i, j)`` is row ``i``, column ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import InputError, InvariantError


def _frozen(arr: np.ndarray) -> np.ndarray:
    out = np.array(arr, dtype=bool, copy=True)
    out.flags.writeable = False
    return out


class BinaryMatrix:
    """Immutable m-by-n 0/1 matrix backed by a read-only boolean array."""

    __slots__ = ("data",)

    def __init__(self, data: np.ndarray | Sequence[Sequence[int]]) -> None:
        arr = np.asarray(data)
        if arr.ndim != 2:
            if arr.size == 0:
                arr = arr.reshape(0, 0)
            else:
                raise InputError(f"matrix must be 2-dimensional, got shape {arr.shape}")
        if arr.dtype != bool:
            if arr.size and not np.isin(arr, (0, 1)).all():
                raise InputError("matrix entries must be 0 or 1")
        self.data = _frozen(arr)

    @classmethod
    def zeros(cls, m: int, n: int) -> "BinaryMatrix":
        return cls(np.zeros((m, n), dtype=bool))

    @classmethod
    def ones(cls, m: int, n: int) -> "BinaryMatrix":
        return cls(np.ones((m, n), dtype=bool))

    @classmethod
    def from_rows(cls, rows: Iterable[str | Sequence[int]], n: int | None = None) -> "BinaryMatrix":
        parsed = [[int(c) for c in row] for row in rows]
        if not parsed:
            return cls(np.zeros((0, n or 0), dtype=bool))
        widths = {len(r) for r in parsed}
        if len(widths) != 1:
            raise InputError("rows have different lengths")
        return cls(np.array(parsed, dtype=np.int64).reshape(len(parsed), widths.pop()))

    @property
    def m(self) -> int:
        return self.data.shape[0]

    @property
    def n(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def support(self) -> frozenset[tuple[int, int]]:
        return frozenset((int(i), int(j)) for i, j in zip(*np.nonzero(self.data)))

    def rows(self) -> list[str]:
        return ["".join("1" if x else "0" for x in row) for row in self.data]

    def permute(self, row_order: Sequence[int], col_order: Sequence[int]) -> "BinaryMatrix":
        return BinaryMatrix(self.data[np.ix_(list(row_order), list(col_order))])

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return int(self.data[ij])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.data, other.data))

    def __hash__(self) -> int:
        return hash((self.shape, self.data.tobytes()))

    def __repr__(self) -> str:
        return f"BinaryMatrix({self.rows()!r})" if self.m else f"BinaryMatrix.zeros(0, {self.n})"


@dataclass(frozen=True)
class RegionDecomposition:
    """Boolean masks for the all-zero corner X, the all-one corner Y and the rest Z."""

    x: np.ndarray
    y: np.ndarray
    z: np.ndarray

    def cells(self, which: str) -> frozenset[tuple[int, int]]:
        mask = getattr(self, which)
        return frozenset((int(i), int(j)) for i, j in zip(*np.nonzero(mask)))


def _prefix_and(mask: np.ndarray) -> np.ndarray:
    out = np.logical_and.accumulate(mask, axis=0)
    return np.logical_and.accumulate(out, axis=1)


def region_decomposition(a: BinaryMatrix) -> RegionDecomposition:
    """X holds cells whose whole upper-left rectangle is zero; Y cells whose
    whole lower-right rectangle is one."""
    data = a.data
    if data.size == 0:
        empty = _frozen(np.zeros(data.shape, dtype=bool))
        return RegionDecomposition(empty, empty, empty)
    x = _prefix_and(~data)
    y = _prefix_and(data[::-1, ::-1])[::-1, ::-1]
    return RegionDecomposition(_frozen(x), _frozen(y), _frozen(~(x | y)))


def is_monotone(a: BinaryMatrix) -> bool:
    """Support is up-closed: every row and column is nondecreasing."""
    d = a.data
    return bool((d[1:, :] >= d[:-1, :]).all() and (d[:, 1:] >= d[:, :-1]).all())


def diagonal_counts(z: np.ndarray) -> dict[int, int]:
    """Number of Z cells on each diagonal ``j = i + c``."""
    m, n = z.shape
    return {c: int(z.diagonal(c).sum()) for c in range(-(m - 1), n)} if z.size else {}


def breadth(a: BinaryMatrix) -> int:
    return max(diagonal_counts(region_decomposition(a).z).values(), default=0)


def _violation_counts(a: BinaryMatrix) -> tuple[np.ndarray, np.ndarray]:
    """``rows[i, k]`` counts columns where row i has 1 and row k has 0;
    ``cols[j, l]`` likewise for columns."""
    d = a.data.astype(np.int64)
    rows = d @ (1 - d).T
    cols = d.T @ (1 - d)
    return rows, cols


def min_restriction(a: BinaryMatrix) -> int:
    """Smallest t for which ``a`` is t-restricted."""
    if a.data.size == 0:
        return 0
    rows, cols = _violation_counts(a)
    worst = 0
    if a.m > 1:
        worst = max(worst, int(rows[np.triu_indices(a.m, 1)].max()))
    if a.n > 1:
        worst = max(worst, int(cols[np.triu_indices(a.n, 1)].max()))
    return worst


def is_t_restricted(a: BinaryMatrix, t: int) -> bool:
    return min_restriction(a) <= t


def is_inclusive(a: BinaryMatrix) -> bool:
    """Row supports are pairwise nested."""
    if a.data.size == 0:
        return True
    rows, _ = _violation_counts(a)
    return bool(((rows == 0) | (rows.T == 0)).all())


def sort_to_monotone(a: BinaryMatrix) -> tuple[BinaryMatrix, list[int], list[int]]:
    """Reorder rows and columns by ascending support size (stable on index).

    Returns the reordered matrix and the two orders, where ``row_order[k]``
    is the original index of the k-th output row.
    """
    if not is_inclusive(a):
        raise InputError("matrix is not inclusive; no reordering makes it monotone")
    row_order = sorted(range(a.m), key=lambda i: (int(a.data[i].sum()), i))
    col_order = sorted(range(a.n), key=lambda j: (int(a.data[:, j].sum()), j))
    out = a.permute(row_order, col_order)
    if not is_monotone(out):
        raise InvariantError("sorted inclusive matrix is not monotone")
    return out, row_order, col_order


def matrix_local_difference(a: BinaryMatrix, b: BinaryMatrix) -> int:
    """Largest number of disagreeing entries in any single row or column."""
    if a.shape != b.shape:
        raise InputError(f"shapes differ: {a.shape} vs {b.shape}")
    if a.data.size == 0:
        return 0
    diff = a.data != b.data
    return int(max(diff.sum(axis=1).max(), diff.sum(axis=0).max()))
