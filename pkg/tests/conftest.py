from __future__ import annotations

from itertools import combinations

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from tdom.graph import Graph
from tdom.matrix import BinaryMatrix

settings.register_profile(
    "default",
    max_examples=150,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def graph_1based(n: int, edges) -> Graph:
    """Build from 1-based edge labels, the way small examples are written by hand."""
    return Graph.from_edges(n, [(u - 1, v - 1) for u, v in edges])


@pytest.fixture
def c4_chord() -> Graph:
    return graph_1based(4, [(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)])


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.integers(0, (1 << len(pairs)) - 1)) if pairs else 0
    return Graph.from_edge_mask(n, mask)


@st.composite
def matrices(draw, max_m: int = 7, max_n: int = 7, min_dim: int = 0) -> BinaryMatrix:
    m = draw(st.integers(min_dim, max_m))
    n = draw(st.integers(min_dim, max_n))
    flat = draw(st.lists(st.booleans(), min_size=m * n, max_size=m * n))
    return BinaryMatrix(np.array(flat, dtype=bool).reshape(m, n))


def all_matrices(m: int, n: int):
    for mask in range(1 << (m * n)):
        yield BinaryMatrix(np.array([(mask >> k) & 1 for k in range(m * n)], dtype=bool).reshape(m, n))


def matrices_of_shape(m: int, n: int):
    return st.lists(st.booleans(), min_size=m * n, max_size=m * n).map(
        lambda flat: BinaryMatrix(np.array(flat, dtype=bool).reshape(m, n))
    )


ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def record_acceptance(number: int, ok: bool, detail: str) -> None:
    ACCEPTANCE[number] = (ok, detail)
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
