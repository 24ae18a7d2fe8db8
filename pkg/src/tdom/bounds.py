"""Clique/stable-set bounds for graphs excluding threshold graphs."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .errors import InputError, InvariantError, ResourceError
from .graph import MAX_PATTERN, Graph, bits, has_induced, is_t_dominating, is_threshold
from .pipeline import reduce_to_split

MAX_RHO_N = 64


def _greedy_colour_bound(g: Graph, cand: int) -> list[tuple[int, int]]:
    """Greedy colouring of ``cand``; returns (vertex, colour) pairs sorted by colour."""
    out = []
    colour = 0
    left = cand
    while left:
        colour += 1
        avail = left
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~g.adj[v] & ~(1 << v)
            left &= ~(1 << v)
            out.append((v, colour))
    return out


def clique_number(g: Graph) -> int:
    """Branch and bound with greedy-colouring bounds (Tomita style)."""
    if g.n > MAX_RHO_N:
        raise ResourceError(f"exact clique search limited to n <= {MAX_RHO_N}")
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        for v, colour in reversed(_greedy_colour_bound(g, cand)):
            if size + colour <= best:
                return
            expand(size + 1, cand & g.adj[v])
            cand &= ~(1 << v)
        if size > best:
            best = size

    expand(0, (1 << g.n) - 1)
    return best


def stability_number(g: Graph) -> int:
    return clique_number(g.complement())


def rho(g: Graph) -> int:
    """Larger of the clique number and the stability number."""
    return max(clique_number(g), stability_number(g))


@dataclass
class BoundReport:
    m: int
    k: int
    rho: int | None
    bound: Fraction | None
    premises: dict[str, bool]
    holds: bool | None

    @property
    def premises_met(self) -> bool:
        return all(self.premises.values())

    def to_json(self) -> dict:
        if self.bound is None:
            bound = None
        elif self.bound.denominator == 1:
            bound = int(self.bound)
        else:
            bound = f"{self.bound.numerator}/{self.bound.denominator}"
        return {
            "m": self.m,
            "k": self.k,
            "rho": self.rho,
            "bound": bound,
            "premises": dict(self.premises),
            "holds": self.holds,
        }


def check_thresholds2(h1: Graph, h2: Graph, g: Graph) -> BoundReport:
    """Check |V(G)| <= (2^m - 1) rho(G)^(k-2) for G excluding threshold H1, H2.

    m is the total pattern size and k = omega(H1) + alpha(H2). The bound is
    evaluated exactly, as a fraction when k < 2.
    """
    if max(h1.n, h2.n) > MAX_PATTERN:
        raise InputError(f"patterns limited to {MAX_PATTERN} vertices")
    premises = {
        "h1_threshold": is_threshold(h1),
        "h2_threshold": is_threshold(h2),
        "g_avoids_h1": not has_induced(g, h1),
        "g_avoids_h2": not has_induced(g, h2),
    }
    m = h1.n + h2.n
    k = clique_number(h1) + stability_number(h2)
    if not all(premises.values()):
        return BoundReport(m, k, None, None, premises, None)
    r = rho(g)
    if r == 0:
        # Only the null graph has rho 0; it satisfies any bound.
        return BoundReport(m, k, 0, None, premises, True)
    bound = (2**m - 1) * Fraction(r) ** (k - 2)
    holds = g.n <= bound
    if not holds:
        raise InvariantError(f"|V(G)| = {g.n} exceeds (2^{m}-1) * {r}^({k}-2) = {bound}")
    return BoundReport(m, k, r, bound, premises, holds)


@dataclass(frozen=True)
class Homogeneous:
    kind: str  # "clique" or "stable"
    vertices: frozenset[int]


def _greedy_independent(adj: list[int], pool: int) -> int:
    """Repeatedly take a vertex of least residual degree and discard its neighbours."""
    chosen = 0
    while pool:
        v = min(bits(pool), key=lambda x: ((adj[x] & pool).bit_count(), x))
        chosen |= 1 << v
        pool &= ~adj[v] & ~(1 << v)
    return chosen


def extract_clique_or_stable(g: Graph, t: int) -> Homogeneous:
    """Clique or stable set of size at least ceil(n / (4t + 2)).

    The split reduction gives a side X of at least half the vertices on
    which G (or its complement) has maximum degree at most 2t; a
    min-degree greedy pass inside X keeps a 1/(2t+1) fraction.
    """
    if not is_t_dominating(g, t):
        raise InputError(f"graph is not {t}-dominating")
    if g.n == 0:
        return Homogeneous("stable", frozenset())
    _, part = reduce_to_split(g, t)
    if len(part.stable) >= len(part.clique):
        kind, side, work = "stable", part.stable, g
    else:
        kind, side, work = "clique", part.clique, g.complement()
    pool = sum(1 << v for v in side)
    chosen = frozenset(bits(_greedy_independent(list(work.adj), pool)))
    need = ceil(g.n / (4 * t + 2))
    ok = g.is_stable(chosen) if kind == "stable" else g.is_clique(chosen)
    if not ok or len(chosen) < need:
        raise InvariantError(f"extracted {kind} of size {len(chosen)} (need {need}) is invalid")
    return Homogeneous(kind, chosen)
