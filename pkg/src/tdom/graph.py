"""Simple undirected graphs, local difference, t-domination and the
recognizers for threshold, split and split half-graphs.

Vertices are ``0..n-1``; a neighbourhood is stored as an int bitmask, so
set algebra on neighbourhoods is a handful of integer operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import InputError

MAX_PATTERN = 8


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise InputError(f"expected {self.n} neighbourhoods, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, nbrs in enumerate(self.adj):
            if nbrs & ~full or nbrs < 0:
                raise InputError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if nbrs >> v & 1:
                raise InputError(f"self-loop at vertex {v}")
            for u in bits(nbrs):
                if not self.adj[u] >> v & 1:
                    raise InputError(f"edge {v}-{u} is not symmetric")

    # construction ---------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def from_edge_mask(cls, n: int, mask: int) -> "Graph":
        """Decode a bitmask over the pairs ``(u, v), u < v`` in lexicographic order."""
        adj = [0] * n
        for idx, (u, v) in enumerate(combinations(range(n), 2)):
            if mask >> idx & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        return cls(n, tuple(adj))

    def edge_mask(self) -> int:
        mask = 0
        for idx, (u, v) in enumerate(combinations(range(self.n), 2)):
            if self.adj[u] >> v & 1:
                mask |= 1 << idx
        return mask

    # queries --------------------------------------------------------------

    def neighbours(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full ^ a ^ (1 << v) for v, a in enumerate(self.adj)))

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabelled in the given vertex order."""
        vs = list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        adj = []
        for v in vs:
            adj.append(to_mask(pos[u] for u in bits(self.adj[v]) if u in pos))
        return Graph(len(vs), tuple(adj))

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = to_mask(vertices)
        return all(self.adj[v] | (1 << v) | ~vs == -1 for v in bits(vs))

    def is_stable(self, vertices: Iterable[int]) -> bool:
        vs = to_mask(vertices)
        return all(not self.adj[v] & vs for v in bits(vs))


def local_difference(g: Graph, h: Graph) -> int:
    """Largest per-vertex symmetric difference of neighbourhoods."""
    if g.n != h.n:
        raise InputError(f"vertex counts differ: {g.n} vs {h.n}")
    return max(((a ^ b).bit_count() for a, b in zip(g.adj, h.adj)), default=0)


# t-domination ---------------------------------------------------------------


@dataclass(frozen=True)
class DominationCertificate:
    """Vertices other than ``u, v`` adjacent to ``v`` but not to ``u``."""

    u: int
    v: int
    witnesses: frozenset[int]

    def holds(self, t: int) -> bool:
        return len(self.witnesses) <= t


def _private(g: Graph, u: int, v: int) -> int:
    return g.adj[v] & ~g.adj[u] & ~(1 << u)


def domination_certificate(g: Graph, u: int, v: int) -> DominationCertificate:
    if u == v:
        raise InputError("domination is defined for distinct vertices")
    return DominationCertificate(u, v, frozenset(bits(_private(g, u, v))))


def dominates(g: Graph, u: int, v: int, t: int) -> bool:
    """Whether ``u`` t-dominates ``v``."""
    if u == v:
        raise InputError("domination is defined for distinct vertices")
    return _private(g, u, v).bit_count() <= t


def is_t_dominating(g: Graph, t: int) -> bool:
    adj = g.adj
    for u in range(g.n):
        au, bu = adj[u], 1 << u
        for v in range(u + 1, g.n):
            av, bv = adj[v], 1 << v
            if (av & ~au & ~bu).bit_count() > t and (au & ~av & ~bv).bit_count() > t:
                return False
    return True


def min_domination(g: Graph) -> int:
    """Smallest t for which ``g`` is t-dominating."""
    adj = g.adj
    worst = 0
    for u in range(g.n):
        au, bu = adj[u], 1 << u
        for v in range(u + 1, g.n):
            av, bv = adj[v], 1 << v
            need = min((av & ~au & ~bu).bit_count(), (au & ~av & ~bv).bit_count())
            if need > worst:
                worst = need
    return worst


# induced subgraphs ----------------------------------------------------------


def _search_order(pattern: Graph) -> list[int]:
    # Connected-first order keeps the candidate masks narrow early on.
    order: list[int] = []
    placed = 0
    remaining = set(range(pattern.n))
    while remaining:
        linked = [p for p in remaining if pattern.adj[p] & placed]
        pool = linked or list(remaining)
        p = max(pool, key=lambda x: ((pattern.adj[x] & placed).bit_count(), pattern.degree(x), -x))
        order.append(p)
        placed |= 1 << p
        remaining.discard(p)
    return order


def find_induced(g: Graph, pattern: Graph) -> list[int] | None:
    """Vertices of ``g`` inducing a copy of ``pattern``, listed so that
    entry ``i`` is the image of pattern vertex ``i``; ``None`` if absent."""
    k = pattern.n
    if k > MAX_PATTERN:
        raise InputError(f"pattern has {k} vertices; at most {MAX_PATTERN} supported")
    if k > g.n:
        return None
    if k == 0:
        return []
    order = _search_order(pattern)
    full = (1 << g.n) - 1
    gdeg = g.degrees()
    pdeg = pattern.degrees()
    # Degree pruning: an image needs at least as many neighbours and
    # non-neighbours as its pattern vertex.
    fits = [
        to_mask(v for v in range(g.n) if gdeg[v] >= pdeg[p] and g.n - 1 - gdeg[v] >= k - 1 - pdeg[p])
        for p in range(k)
    ]
    image = [-1] * k

    def extend(depth: int, used: int) -> bool:
        if depth == k:
            return True
        p = order[depth]
        cand = fits[p] & ~used
        for q in order[:depth]:
            w = image[q]
            if pattern.adj[p] >> q & 1:
                cand &= g.adj[w]
            else:
                cand &= full & ~g.adj[w]
            if not cand:
                return False
        for v in bits(cand):
            image[p] = v
            if extend(depth + 1, used | (1 << v)):
                return True
        image[p] = -1
        return False

    return list(image) if extend(0, 0) else None


def has_induced(g: Graph, pattern: Graph) -> bool:
    return find_induced(g, pattern) is not None


def c4() -> Graph:
    return Graph.cycle(4)


def two_k2() -> Graph:
    return Graph.from_edges(4, [(0, 1), (2, 3)])


def p4() -> Graph:
    return Graph.path(4)


def c5() -> Graph:
    return Graph.cycle(5)


FORBIDDEN = {"C4": c4, "2K2": two_k2, "P4": p4, "C5": c5}


# recognizers ----------------------------------------------------------------


@dataclass(frozen=True)
class SplitPartition:
    clique: frozenset[int]
    stable: frozenset[int]

    def is_valid_for(self, g: Graph) -> bool:
        return (
            not self.clique & self.stable
            and len(self.clique) + len(self.stable) == g.n
            and all(0 <= v < g.n for v in self.clique | self.stable)
            and g.is_clique(self.clique)
            and g.is_stable(self.stable)
        )


def threshold_build_sequence(g: Graph) -> list[tuple[int, str]] | None:
    """Peel isolated/universal vertices; return the build order or ``None``.

    Each entry is ``(vertex, "isolated" | "universal")`` describing how the
    vertex is added when the graph is rebuilt from the null graph. The
    lowest isolated vertex is peeled first, then the lowest universal one.
    """
    alive = (1 << g.n) - 1
    count = g.n
    peeled: list[tuple[int, str]] = []
    while alive:
        pick = None
        for v in bits(alive):
            if not g.adj[v] & alive:
                pick = (v, "isolated")
                break
        if pick is None:
            for v in bits(alive):
                if (g.adj[v] & alive).bit_count() == count - 1:
                    pick = (v, "universal")
                    break
        if pick is None:
            return None
        peeled.append(pick)
        alive &= ~(1 << pick[0])
        count -= 1
    peeled.reverse()
    return peeled


def is_threshold(g: Graph) -> bool:
    return threshold_build_sequence(g) is not None


def degree_order(g: Graph, vertices: Iterable[int] | None = None) -> list[int]:
    """Vertices sorted by nondecreasing degree in ``g``, ties by index."""
    vs = range(g.n) if vertices is None else vertices
    return sorted(vs, key=lambda v: (g.degree(v), v))


def is_split(g: Graph) -> SplitPartition | None:
    """A clique/stable-set partition, or ``None`` if ``g`` is not split.

    Uses the degree-sequence test of Hammer and Simeone: with degrees sorted
    decreasingly and ``k`` the largest index with ``d_k >= k - 1``, the graph
    is split exactly when the top ``k`` degrees sum to ``k(k-1)`` plus the
    remaining degrees, and then the top ``k`` vertices form a clique.
    """
    if g.n == 0:
        return SplitPartition(frozenset(), frozenset())
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    deg = [g.degree(v) for v in order]
    k = max(i + 1 for i in range(g.n) if deg[i] >= i)
    if sum(deg[:k]) != k * (k - 1) + sum(deg[k:]):
        return None
    part = SplitPartition(frozenset(order[:k]), frozenset(order[k:]))
    assert part.is_valid_for(g)
    return part


def is_split_half_graph(g: Graph) -> bool:
    """Split, and the stable side's neighbourhoods form an inclusion chain."""
    part = is_split(g)
    if part is None:
        return False
    cmask = to_mask(part.clique)
    nbhds = sorted((g.adj[v] & cmask for v in part.stable), key=int.bit_count)
    return all(a & ~b == 0 for a, b in zip(nbhds, nbhds[1:]))
