"""Seeded generators for graphs and matrices.

Everything is a deterministic function of its parameters and a 64-bit seed
via :class:`tdom.rng.SplitMix64`.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

import numpy as np

from .errors import InputError
from .graph import Graph, has_induced
from .matrix import BinaryMatrix
from .rng import SplitMix64

MAX_ENUMERATION = 7


def gen_threshold(n: int, seed: int) -> Graph:
    """Random threshold graph: each new vertex is isolated or universal by a
    coin flip, then labels are shuffled."""
    rng = SplitMix64(seed)
    universal = [rng.coin() for _ in range(n)]
    labels = list(range(n))
    rng.shuffle(labels)
    adj = [0] * n
    added = 0
    for step in range(n):
        v = labels[step]
        if universal[step]:
            adj[v] = added
            for u in range(n):
                if added >> u & 1:
                    adj[u] |= 1 << v
        added |= 1 << v
    return Graph(n, tuple(adj))


def gen_perturbed(g: Graph, d: int, seed: int) -> Graph:
    """Toggle random pairs so that every vertex sees at most ``d`` toggles.

    ``n * d`` candidate pairs are drawn; a pair is accepted when neither end
    has used up its budget and the pair was not toggled before.
    """
    if d < 0:
        raise InputError("d must be nonnegative")
    if d == 0 or g.n < 2:
        return g
    rng = SplitMix64(seed)
    budget = [0] * g.n
    toggled: set[tuple[int, int]] = set()
    adj = list(g.adj)
    for _ in range(g.n * d):
        u = rng.below(g.n)
        v = rng.below(g.n - 1)
        if v >= u:
            v += 1
        pair = (min(u, v), max(u, v))
        if pair in toggled or budget[u] >= d or budget[v] >= d:
            continue
        toggled.add(pair)
        budget[u] += 1
        budget[v] += 1
        adj[u] ^= 1 << v
        adj[v] ^= 1 << u
    return Graph(g.n, tuple(adj))


def gen_staircase(m: int, n: int, rng: SplitMix64) -> BinaryMatrix:
    """Random monotone matrix: row i is 1 from column ``cut[i]`` on, with
    cuts nonincreasing down the rows."""
    cuts = sorted((rng.below(n + 1) for _ in range(m)), reverse=True)
    data = np.zeros((m, n), dtype=bool)
    for i, c in enumerate(cuts):
        data[i, c:] = True
    return BinaryMatrix(data)


def gen_t_restricted(m: int, n: int, d: int, seed: int) -> BinaryMatrix:
    """Random staircase with at most ``d`` flipped cells per row and column.

    Any two rows then disagree in the bad direction in at most 2d places,
    so the result is 2d-restricted.
    """
    if d < 0:
        raise InputError("d must be nonnegative")
    rng = SplitMix64(seed)
    base = gen_staircase(m, n, rng)
    if d == 0 or m == 0 or n == 0:
        return base
    data = np.array(base.data)
    row_used = [0] * m
    col_used = [0] * n
    flipped: set[tuple[int, int]] = set()
    for _ in range(max(m, n) * d):
        i = rng.below(m)
        j = rng.below(n)
        if (i, j) in flipped or row_used[i] >= d or col_used[j] >= d:
            continue
        flipped.add((i, j))
        row_used[i] += 1
        col_used[j] += 1
        data[i, j] = not data[i, j]
    return BinaryMatrix(data)


def gen_stair(n: int, tweaked: bool = False) -> BinaryMatrix:
    """The padded (n+1)-by-n staircase with a half-ones middle row.

    ``n/2`` zero rows, the row of ``n/2`` ones then ``n/2`` zeros, and ``n/2``
    rows of ones. The tweaked variant also sets one 1 in each zero row (row
    i gets column n/2 + i) and clears one entry in each ones row (row
    n/2 + 1 + i loses column i), which makes row and column sums
    nondecreasing.
    """
    if n < 4 or n % 2:
        raise InputError("gen_stair needs an even n >= 4")
    h = n // 2
    data = np.zeros((n + 1, n), dtype=bool)
    data[h, :h] = True
    data[h + 1 :, :] = True
    if tweaked:
        for i in range(h):
            data[i, h + i] = True
            data[h + 1 + i, i] = False
    return BinaryMatrix(data)


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """All labelled graphs on ``n`` vertices, by increasing edge mask."""
    if n > MAX_ENUMERATION:
        raise InputError(f"enumeration limited to n <= {MAX_ENUMERATION}")
    if n < 0:
        raise InputError("n must be nonnegative")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for idx, (u, v) in enumerate(pairs):
            if mask >> idx & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        yield Graph(n, tuple(adj))


def gen_avoiding(h1: Graph, h2: Graph, n_max: int, seed: int, tries: int = 4) -> Graph:
    """Random graph containing neither ``h1`` nor ``h2`` as an induced subgraph.

    Vertices are added one at a time with random neighbourhoods; an addition
    creating a forbidden copy is retried up to ``tries`` times and growth
    stops at the first vertex that cannot be placed.
    """
    rng = SplitMix64(seed)
    g = Graph.empty(0)
    while g.n < n_max:
        placed = None
        for _ in range(tries):
            p = rng.below(g.n + 2)
            nbrs = [u for u in range(g.n) if rng.below(g.n + 1) < p]
            cand = Graph.from_edges(g.n + 1, [*g.edges(), *((u, g.n) for u in nbrs)])
            if not has_induced(cand, h1) and not has_induced(cand, h2):
                placed = cand
                break
        if placed is None:
            break
        g = placed
    return g
