"""A 1-nested bipartite graph far from every half-graph.

Leaves of the depth-k binary tree form side B. Side A holds the internal
tree nodes plus, for every leaf, a padding block W_s. A leaf sees the whole
padding block of every strictly smaller leaf, which makes degrees grow with
the leaf's binary value, and sees an internal node according to where the
two root paths split. Any half-graph within bipartite local difference
k - 1 must keep that degree order, and the adversary walk below then finds a
leaf disagreeing with it on k internal nodes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product
from bisect import bisect_left

from .errors import InputError, ResourceError
from .graph import bits

MAX_DEPTH = 6
MAX_ORACLE_B = 5
MAX_ORACLE_D = 4


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph on sides A (``0..na-1``) and B (``0..nb-1``).

    ``adj[b]`` is the bitmask of A-neighbours of B-vertex ``b``.
    """

    na: int
    nb: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.nb:
            raise InputError(f"expected {self.nb} B-neighbourhoods, got {len(self.adj)}")
        full = (1 << self.na) - 1
        if any(a < 0 or a & ~full for a in self.adj):
            raise InputError("B-vertex adjacent to an A-vertex out of range")

    @classmethod
    def from_edges(cls, na: int, nb: int, edges) -> "BipartiteGraph":
        adj = [0] * nb
        for a, b in edges:
            if not (0 <= a < na and 0 <= b < nb):
                raise InputError(f"edge ({a}, {b}) out of range")
            adj[b] |= 1 << a
        return cls(na, nb, tuple(adj))

    def edges(self) -> list[tuple[int, int]]:
        return sorted((a, b) for b in range(self.nb) for a in bits(self.adj[b]))

    def a_neighbours(self, a: int) -> int:
        """Bitmask over B of the neighbours of A-vertex ``a``."""
        return sum(1 << b for b in range(self.nb) if self.adj[b] >> a & 1)

    def degree(self, b: int) -> int:
        return self.adj[b].bit_count()

    def toggle(self, pairs) -> "BipartiteGraph":
        adj = list(self.adj)
        for a, b in pairs:
            adj[b] ^= 1 << a
        return BipartiteGraph(self.na, self.nb, tuple(adj))


def nesting_level(g: BipartiteGraph) -> int:
    """Smallest t for which ``g`` is t-nested."""
    worst = 0
    for u in range(g.nb):
        for v in range(u + 1, g.nb):
            x, y = g.adj[u], g.adj[v]
            worst = max(worst, min((x & ~y).bit_count(), (y & ~x).bit_count()))
    return worst


def is_t_nested(g: BipartiteGraph, t: int) -> bool:
    return nesting_level(g) <= t


def bipartite_local_difference(g: BipartiteGraph, h: BipartiteGraph) -> int:
    """Largest neighbourhood change over B-vertices only."""
    if (g.na, g.nb) != (h.na, h.nb):
        raise InputError(f"bipartitions differ: {(g.na, g.nb)} vs {(h.na, h.nb)}")
    return max(((x ^ y).bit_count() for x, y in zip(g.adj, h.adj)), default=0)


def leaf_value(s: tuple[int, ...]) -> int:
    k = len(s)
    return sum(bit << (k - 1 - i) for i, bit in enumerate(s))


def sees_internal(leaf: tuple[int, ...], node: tuple[int, ...]) -> bool:
    """Leaf/internal-node adjacency.

    If ``node`` lies on the leaf's root path, the leaf's next bit after it
    decides (0 means adjacent). Otherwise the first vertex of the node's root
    path off the leaf's path decides by its own label. Every node's
    neighbourhood is then the left half of its subtree plus every leaf to
    the right of the subtree.
    """
    for i, bit in enumerate(node):
        if leaf[i] != bit:
            return bit == 0
    return leaf[len(node)] == 0


@dataclass(frozen=True)
class TreeCounterexample:
    k: int
    graph: BipartiteGraph

    @cached_property
    def leaves(self) -> list[tuple[int, ...]]:
        """Leaves indexed by their binary value, so leaf index = B index."""
        return [tuple(int(c) for c in format(x, f"0{self.k}b")) if self.k else () for x in range(2**self.k)]

    @cached_property
    def internal(self) -> list[tuple[int, ...]]:
        """Internal nodes in breadth-first order; node index = A index."""
        return [s for length in range(self.k) for s in product((0, 1), repeat=length)]

    @cached_property
    def internal_index(self) -> dict[tuple[int, ...], int]:
        return {s: i for i, s in enumerate(self.internal)}

    @property
    def block_size(self) -> int:
        return 2 ** (self.k + 1) + 2 * self.k

    def block(self, leaf: int) -> range:
        """A-indices of the padding block of leaf ``leaf``."""
        start = len(self.internal) + leaf * self.block_size
        return range(start, start + self.block_size)

    @property
    def internal_mask(self) -> int:
        return (1 << len(self.internal)) - 1

    def degree_interval(self, leaf: int) -> tuple[int, int]:
        low = self.block_size * leaf
        return low, low + 2 ** (self.k + 1) - 1

    def sizes(self) -> dict[str, int]:
        return {
            "A": self.graph.na,
            "B": self.graph.nb,
            "I": len(self.internal),
            "W": self.graph.na - len(self.internal),
        }

    def degree_bounds_ok(self) -> bool:
        return all(
            lo <= self.graph.degree(b) <= hi
            for b in range(self.graph.nb)
            for lo, hi in [self.degree_interval(b)]
        )

    def private_witnesses_ok(self) -> bool:
        """For leaves s < s': at most one A-vertex sees s but not s', and it is internal."""
        adj = self.graph.adj
        for s in range(len(adj)):
            for s2 in range(s + 1, len(adj)):
                extra = adj[s] & ~adj[s2]
                if extra.bit_count() > 1 or extra & ~self.internal_mask:
                    return False
        return True


def build_counterexample(k: int) -> TreeCounterexample:
    if k < 1:
        raise InputError("k must be positive")
    if k > MAX_DEPTH:
        raise ResourceError(f"counterexample limited to k <= {MAX_DEPTH}")
    skeleton = TreeCounterexample(k, BipartiteGraph(0, 0, ()))
    leaves = skeleton.leaves
    internal = skeleton.internal
    na = len(internal) + len(leaves) * skeleton.block_size
    adj = []
    for value, leaf in enumerate(leaves):
        mask = 0
        for idx, node in enumerate(internal):
            if sees_internal(leaf, node):
                mask |= 1 << idx
        for smaller in range(value):
            for a in skeleton.block(smaller):
                mask |= 1 << a
        adj.append(mask)
    return TreeCounterexample(k, BipartiteGraph(na, len(leaves), tuple(adj)))


# adversary walk -------------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    leaf: int
    path: tuple[int, ...]
    disagreements: int


@dataclass(frozen=True)
class OrderViolation:
    """The walk's dichotomy failed at ``node``: ``low_leaf`` (left branch) is
    adjacent to it in H while ``high_leaf`` (right branch) is not."""

    node: int
    low_leaf: int
    high_leaf: int


def is_half_graph(h: BipartiteGraph) -> bool:
    return is_t_nested(h, 0)


def adversary_witness(gk: TreeCounterexample, h: BipartiteGraph) -> Witness | OrderViolation:
    """Walk from the root, at each internal node following the branch on
    which H contradicts G wholesale."""
    if (h.na, h.nb) != (gk.graph.na, gk.graph.nb):
        raise InputError("H must share the bipartition of the counterexample")
    if not is_half_graph(h):
        raise InputError("H is not 0-nested")
    prefix: tuple[int, ...] = ()
    path = []
    for depth in range(gk.k):
        node = gk.internal_index[prefix]
        path.append(node)
        span = 2 ** (gk.k - depth - 1)
        start = leaf_value(prefix + (0,) * (gk.k - depth))
        low = range(start, start + span)
        high = range(start + span, start + 2 * span)
        if not any(h.adj[b] >> node & 1 for b in low):
            prefix += (0,)
        elif all(h.adj[b] >> node & 1 for b in high):
            prefix += (1,)
        else:
            lo = next(b for b in low if h.adj[b] >> node & 1)
            hi = next(b for b in high if not h.adj[b] >> node & 1)
            return OrderViolation(node, lo, hi)
    leaf = leaf_value(prefix)
    g_adj, h_adj = gk.graph.adj[leaf], h.adj[leaf]
    count = sum((g_adj >> node & 1) != (h_adj >> node & 1) for node in path)
    return Witness(leaf, tuple(path), count)


# half-graph oracle ----------------------------------------------------------


def _feasible_for_order(columns: list[int], order: tuple[int, ...], d: int) -> bool:
    nb = len(order)
    # Choice p makes an A-vertex adjacent to order[p:]; cost vectors per column pattern.
    suffix_masks = [sum(1 << b for b in order[p:]) for p in range(nb + 1)]
    states = {(0,) * nb}
    cache: dict[int, list[tuple[int, ...]]] = {}
    for col in columns:
        costs = cache.get(col)
        if costs is None:
            costs = [tuple((col ^ sm) >> b & 1 for b in range(nb)) for sm in suffix_masks]
            cache[col] = costs
        nxt = set()
        for state in states:
            for cost in costs:
                new = tuple(x + y for x, y in zip(state, cost))
                if max(new) <= d:
                    nxt.add(new)
        if not nxt:
            return False
        states = nxt
    return True


def oracle_min_halfgraph_distance(g: BipartiteGraph, d_max: int = MAX_ORACLE_D) -> int:
    """Exact minimum bipartite local difference from ``g`` to a half-graph.

    A half-graph orders B so that each A-vertex sees a suffix of the order.
    For a fixed order and budget d, a DP over A-vertices tracks the vector
    of per-B change counts (each capped at d); the smallest feasible d over
    all orders is found by bisection.
    """
    if g.nb > MAX_ORACLE_B:
        raise ResourceError(f"half-graph oracle limited to |B| <= {MAX_ORACLE_B}")
    if g.nb <= 1:
        return 0
    columns = [g.a_neighbours(a) for a in range(g.na)]
    orders = list(permutations(range(g.nb)))

    def feasible(d: int) -> bool:
        return any(_feasible_for_order(columns, order, d) for order in orders)

    d = bisect_left(range(d_max + 1), True, key=feasible)
    if d > d_max:
        raise ResourceError(f"half-graph distance exceeds the search bound {d_max}")
    return d
