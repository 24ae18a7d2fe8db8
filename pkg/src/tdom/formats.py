"""Plain-text formats for graphs, matrices and bipartite graphs.

graph      first line ``n m``, then m lines ``u v`` with 0 <= u < v < n
matrix     first line ``m n``, then m lines of n characters from {0,1}
bipartite  first line ``na nb m``, then m lines ``a b`` (a on side A, b on side B)

Blank lines are ignored. Parse failures raise :class:`InputError` naming
the offending line.
"""

from __future__ import annotations

import numpy as np

from .counterexample import BipartiteGraph
from .errors import InputError
from .graph import Graph
from .matrix import BinaryMatrix


def _lines(text: str) -> list[tuple[int, str]]:
    return [(no, line.strip()) for no, line in enumerate(text.splitlines(), 1) if line.strip()]


def _ints(no: int, line: str, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise InputError(f"line {no}: expected {count} integers, got {line!r}")
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise InputError(f"line {no}: expected integers, got {line!r}") from None
    if any(v < 0 for v in values):
        raise InputError(f"line {no}: negative value in {line!r}")
    return values


def _header(lines: list[tuple[int, str]], count: int, kind: str) -> list[int]:
    if not lines:
        raise InputError(f"line 1: empty {kind} file")
    return _ints(*lines[0], count)


def parse_graph(text: str) -> Graph:
    lines = _lines(text)
    n, m = _header(lines, 2, "graph")
    body = lines[1:]
    if len(body) != m:
        raise InputError(f"line {lines[0][0]}: header declares {m} edges, found {len(body)}")
    seen = set()
    for no, line in body:
        u, v = _ints(no, line, 2)
        if not u < v < n:
            raise InputError(f"line {no}: need 0 <= u < v < {n}, got {line!r}")
        if (u, v) in seen:
            raise InputError(f"line {no}: duplicate edge {u} {v}")
        seen.add((u, v))
    return Graph.from_edges(n, seen)


def format_graph(g: Graph) -> str:
    edges = g.edges()
    return "".join([f"{g.n} {len(edges)}\n", *(f"{u} {v}\n" for u, v in edges)])


def parse_matrix(text: str) -> BinaryMatrix:
    lines = _lines(text)
    m, n = _header(lines, 2, "matrix")
    body = lines[1:]
    if n == 0 and not body:
        # Empty rows are blank lines, which are skipped.
        return BinaryMatrix.zeros(m, 0)
    if len(body) != m:
        raise InputError(f"line {lines[0][0]}: header declares {m} rows, found {len(body)}")
    data = np.zeros((m, n), dtype=bool)
    for i, (no, line) in enumerate(body):
        if len(line) != n or set(line) - {"0", "1"}:
            raise InputError(f"line {no}: expected {n} characters from 0/1, got {line!r}")
        data[i] = [c == "1" for c in line]
    return BinaryMatrix(data)


def format_matrix(a: BinaryMatrix) -> str:
    return "".join([f"{a.m} {a.n}\n", *(row + "\n" for row in a.rows())])


def parse_bipartite(text: str) -> BipartiteGraph:
    lines = _lines(text)
    na, nb, m = _header(lines, 3, "bipartite")
    body = lines[1:]
    if len(body) != m:
        raise InputError(f"line {lines[0][0]}: header declares {m} edges, found {len(body)}")
    seen = set()
    for no, line in body:
        a, b = _ints(no, line, 2)
        if not (a < na and b < nb):
            raise InputError(f"line {no}: need a < {na} and b < {nb}, got {line!r}")
        if (a, b) in seen:
            raise InputError(f"line {no}: duplicate edge {a} {b}")
        seen.add((a, b))
    return BipartiteGraph.from_edges(na, nb, seen)


def format_bipartite(g: BipartiteGraph) -> str:
    edges = g.edges()
    return "".join([f"{g.na} {g.nb} {len(edges)}\n", *(f"{a} {b}\n" for a, b in edges)])
