"""Graph-level repair: t-dominating graph -> split graph -> threshold graph."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Sequence

import numpy as np

from .errors import InputError, InvariantError
from .graph import (
    Graph,
    SplitPartition,
    bits,
    degree_order,
    is_split,
    is_split_half_graph,
    is_t_dominating,
    is_threshold,
    local_difference,
    min_domination,
    to_mask,
)
from .matrix import BinaryMatrix, is_inclusive, is_t_restricted, matrix_local_difference
from .matrix_repair import repair_matrix_stages

Verify = Literal["off", "post", "full"]
VERIFY_LEVELS = ("off", "post", "full")


def reduce_to_split(g: Graph, t: int, verify: bool = True) -> tuple[Graph, SplitPartition]:
    """Split graph within local difference 2t of a t-dominating ``g``.

    Scanning vertices by nondecreasing degree, the first prefix containing a
    vertex with 2t+1 neighbours inside the prefix fixes the cut: everything
    before that vertex becomes a stable set, the rest a clique. If no prefix
    qualifies every degree is at most 2t and all edges are dropped.
    """
    if t < 0:
        raise InputError("t must be nonnegative")
    if not is_t_dominating(g, t):
        raise InputError(f"graph is not {t}-dominating")
    if is_threshold(g):
        part = is_split(g)
        assert part is not None
        return g, part

    order = degree_order(g)
    inside = [0] * g.n
    prefix = 0
    cut = None
    for pos, v in enumerate(order):
        nbrs = g.adj[v] & prefix
        inside[v] = nbrs.bit_count()
        for u in bits(nbrs):
            inside[u] += 1
        prefix |= 1 << v
        if inside[v] > 2 * t or any(inside[u] > 2 * t for u in bits(nbrs)):
            cut = pos
            break

    if cut is None:
        h = Graph.empty(g.n)
        part = SplitPartition(frozenset(), frozenset(range(g.n)))
    else:
        stable = order[:cut]
        clique = order[cut:]
        cmask = to_mask(clique)
        adj = []
        for v in range(g.n):
            if cmask >> v & 1:
                adj.append(g.adj[v] | cmask & ~(1 << v))
            else:
                adj.append(g.adj[v] & cmask)
        h = Graph(g.n, tuple(adj))
        part = SplitPartition(frozenset(clique), frozenset(stable))

    if verify:
        if not part.is_valid_for(h):
            raise InvariantError("reduced graph does not respect its split partition")
        if not is_t_dominating(h, t):
            raise InvariantError(f"reduced graph is not {t}-dominating")
        d = local_difference(g, h)
        if d > 2 * t:
            raise InvariantError(f"split reduction moved local difference {d} > {2 * t}")
    return h, part


def split_to_matrix(
    g: Graph, part: SplitPartition, t: int | None = None
) -> tuple[BinaryMatrix, list[int], list[int]]:
    """Clique-by-stable adjacency matrix with both sides in degree order.

    With ``t`` given, the result is checked to be t-restricted, which holds
    whenever ``g`` is t-dominating.
    """
    if not part.is_valid_for(g):
        raise InputError("partition is not a clique/stable split of the graph")
    rows = degree_order(g, part.clique)
    cols = degree_order(g, part.stable)
    data = np.zeros((len(rows), len(cols)), dtype=bool)
    for i, u in enumerate(rows):
        for j, v in enumerate(cols):
            data[i, j] = g.adj[u] >> v & 1
    a = BinaryMatrix(data)
    if t is not None and not is_t_restricted(a, t):
        raise InvariantError(f"split adjacency matrix is not {t}-restricted")
    return a, rows, cols


def matrix_to_graph(
    b: BinaryMatrix, rows: Sequence[int], cols: Sequence[int], n: int | None = None
) -> Graph:
    """Split graph with clique ``rows``, stable set ``cols`` and cross edges from ``b``."""
    if b.shape != (len(rows), len(cols)):
        raise InputError(f"matrix shape {b.shape} does not match {len(rows)} rows and {len(cols)} columns")
    if not is_inclusive(b):
        raise InputError("matrix is not inclusive")
    n = len(rows) + len(cols) if n is None else n
    if sorted([*rows, *cols]) != list(range(n)):
        raise InputError("row and column vertices must partition 0..n-1")
    adj = [0] * n
    cmask = to_mask(rows)
    for u in rows:
        adj[u] |= cmask & ~(1 << u)
    for i, j in zip(*np.nonzero(b.data)):
        u, v = rows[i], cols[j]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    h = Graph(n, tuple(adj))
    if not is_split_half_graph(h):
        raise InvariantError("inclusive matrix produced a graph that is not a split half-graph")
    return h


@dataclass
class RepairReport:
    t: int
    to_split: int
    to_halfgraph: int
    total: int
    output_threshold: bool
    bounds_hold: bool
    rows: list[int] = field(default_factory=list)
    cols: list[int] = field(default_factory=list)
    split_graph: Graph | None = None
    partition: SplitPartition | None = None
    matrix_before: BinaryMatrix | None = None
    matrix_reduced: BinaryMatrix | None = None
    matrix_after: BinaryMatrix | None = None

    @property
    def split_bound(self) -> int:
        return 2 * self.t

    @property
    def matrix_bound(self) -> int:
        return 644 * self.t**4

    @property
    def total_bound(self) -> int:
        return 646 * self.t**4

    @property
    def verified(self) -> bool:
        return self.output_threshold and self.bounds_hold

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "stage_diffs": {
                "to_split": self.to_split,
                "to_halfgraph": self.to_halfgraph,
                "total": self.total,
            },
            "bounds": {
                "split": self.split_bound,
                "matrix": self.matrix_bound,
                "total": self.total_bound,
            },
            "verified": {
                "output_threshold": self.output_threshold,
                "bounds_hold": self.bounds_hold,
            },
            "orders": {"rows": list(self.rows), "cols": list(self.cols)},
        }


def repair_graph(g: Graph, t: int | None = None, verify: Verify = "post") -> tuple[Graph, RepairReport]:
    """Threshold graph within local difference 646 t^4 of a t-dominating ``g``.

    ``t`` defaults to the exact domination level of ``g``. Already-threshold
    inputs are returned unchanged.
    """
    if verify not in VERIFY_LEVELS:
        raise InputError(f"verify must be one of {VERIFY_LEVELS}")
    if t is None:
        t = min_domination(g)
    elif t < 0:
        raise InputError("t must be nonnegative")
    elif not is_t_dominating(g, t):
        raise InputError(f"graph is not {t}-dominating")

    full = verify == "full"
    if is_threshold(g):
        part = is_split(g)
        assert part is not None
        _, rows, cols = split_to_matrix(g, part)
        return g, RepairReport(t, 0, 0, 0, True, True, rows, cols, g, part)
    if t == 0:
        raise InputError("a non-threshold graph is not 0-dominating")

    split, part = reduce_to_split(g, t, verify=full)
    a, rows, cols = split_to_matrix(split, part, t if full else None)
    stages = repair_matrix_stages(a, t, verify=full)
    h = matrix_to_graph(stages.result, rows, cols, g.n)

    to_split = local_difference(g, split)
    to_half = local_difference(split, h)
    total = local_difference(g, h)
    report = RepairReport(
        t=t,
        to_split=to_split,
        to_halfgraph=to_half,
        total=total,
        output_threshold=True,
        bounds_hold=True,
        rows=rows,
        cols=cols,
        split_graph=split,
        partition=part,
        matrix_before=a,
        matrix_reduced=stages.reduced,
        matrix_after=stages.result,
    )
    if verify != "off":
        report.output_threshold = is_threshold(h)
        report.bounds_hold = (
            to_split <= report.split_bound
            and to_half <= report.matrix_bound
            and total <= report.total_bound
            and to_half == matrix_local_difference(a, stages.result)
        )
    return h, report
