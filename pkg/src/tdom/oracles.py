"""Brute-force optima used as ground truth for the repair bounds."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

import numpy as np

from .errors import InputError, ResourceError
from .graph import Graph
from .matrix import BinaryMatrix

MAX_ORACLE_N = 7
MAX_STAIRCASE = 24


@lru_cache(maxsize=None)
def _pair_index(n: int) -> dict[tuple[int, int], int]:
    return {pair: idx for idx, pair in enumerate(combinations(range(n), 2))}


@lru_cache(maxsize=None)
def _labelled_thresholds(subset: int, n: int) -> frozenset[int]:
    """Edge masks of all threshold graphs on the vertex set ``subset``.

    The last vertex added is isolated or universal; recursing on which
    vertex that is covers every build sequence.
    """
    if subset & (subset - 1) == 0:
        return frozenset({0})
    index = _pair_index(n)
    out: set[int] = set()
    members = [v for v in range(n) if subset >> v & 1]
    for v in members:
        rest = subset & ~(1 << v)
        star = 0
        for u in members:
            if u != v:
                star |= 1 << index[(min(u, v), max(u, v))]
        for mask in _labelled_thresholds(rest, n):
            out.add(mask)
            out.add(mask | star)
    return frozenset(out)


@lru_cache(maxsize=None)
def threshold_masks(n: int) -> np.ndarray:
    """Sorted edge masks of every labelled threshold graph on n vertices."""
    if n > MAX_ORACLE_N:
        raise ResourceError(f"threshold oracle limited to n <= {MAX_ORACLE_N}")
    if n == 0:
        return np.zeros(1, dtype=np.int64)
    return np.array(sorted(_labelled_thresholds((1 << n) - 1, n)), dtype=np.int64)


@lru_cache(maxsize=None)
def max_degree_table(n: int) -> np.ndarray:
    """``table[mask]`` is the maximum degree of the graph with that edge mask."""
    pairs = list(combinations(range(n), 2))
    masks = np.arange(1 << len(pairs), dtype=np.int64)
    best = np.zeros(masks.shape, dtype=np.int8)
    for v in range(n):
        incident = 0
        for idx, (a, b) in enumerate(pairs):
            if v in (a, b):
                incident |= 1 << idx
        deg = np.bitwise_count(masks & incident).astype(np.int8)
        np.maximum(best, deg, out=best)
    return best


def oracle_min_threshold_distance(g: Graph) -> int:
    """Exact minimum local difference from ``g`` to a threshold graph."""
    if g.n > MAX_ORACLE_N:
        raise InputError(f"threshold oracle limited to n <= {MAX_ORACLE_N}")
    if g.n < 2:
        return 0
    table = max_degree_table(g.n)
    return int(table[threshold_masks(g.n) ^ g.edge_mask()].min())


def oracle_min_monotone_distance(a: BinaryMatrix) -> int:
    """Exact minimum local difference from ``a`` to a monotone matrix.

    Monotone matrices are staircases: row i is 1 exactly from column
    ``cut[i]`` on, with cuts nonincreasing down the rows. A depth-first walk
    over cuts tracks per-column mismatch counts and prunes any branch
    already as bad as the best complete staircase.
    """
    m, n = a.shape
    if m + n > MAX_STAIRCASE:
        raise InputError(f"monotone oracle limited to m + n <= {MAX_STAIRCASE}")
    if m == 0 or n == 0:
        return 0
    data = a.data
    # mism[i][c]: mismatch vector of row i against cut c, and its total.
    row_vecs = []
    for i in range(m):
        vecs = []
        for c in range(n + 1):
            target = np.zeros(n, dtype=bool)
            target[c:] = True
            vecs.append((data[i] != target).astype(np.int64))
        row_vecs.append(vecs)
    row_cost = [[int(v.sum()) for v in vecs] for vecs in row_vecs]
    best = max(m, n) + 1

    def walk(i: int, max_cut: int, cols: np.ndarray, worst: int) -> None:
        nonlocal best
        if i == m:
            best = min(best, worst)
            return
        for c in range(max_cut, -1, -1):
            rc = row_cost[i][c]
            if rc >= best:
                continue
            nxt = cols + row_vecs[i][c]
            w = max(worst, rc, int(nxt.max()))
            if w < best:
                walk(i + 1, c, nxt, w)

    walk(0, n, np.zeros(n, dtype=np.int64), 0)
    return best
