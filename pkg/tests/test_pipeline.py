from __future__ import annotations

import pytest
from hypothesis import given

from tdom.errors import InputError
from tdom.generators import enumerate_graphs, gen_perturbed, gen_threshold
from tdom.graph import (
    Graph,
    SplitPartition,
    c4,
    is_split_half_graph,
    is_t_dominating,
    is_threshold,
    local_difference,
    min_domination,
    p4,
    two_k2,
)
from tdom.matrix import BinaryMatrix, is_t_restricted
from tdom.oracles import oracle_min_threshold_distance
from tdom.pipeline import matrix_to_graph, reduce_to_split, repair_graph, split_to_matrix

from conftest import graphs

M = BinaryMatrix.from_rows


def test_c4_repairs_to_edgeless_graph():
    h, part = reduce_to_split(c4(), 1)
    assert h == Graph.empty(4)
    assert part == SplitPartition(frozenset(), frozenset(range(4)))
    out, rep = repair_graph(c4(), 1)
    assert is_threshold(out)
    assert rep.total == local_difference(c4(), out) == 2
    assert rep.verified


def test_threshold_inputs_are_fixed_points():
    for g in (Graph.complete(5), Graph.empty(3), gen_threshold(20, 7)):
        out, rep = repair_graph(g, 0)
        assert out == g and rep.total == 0 and rep.verified
        assert reduce_to_split(g, 0)[0] == g


def test_zero_t_rejected_for_non_threshold():
    with pytest.raises(InputError):
        repair_graph(p4(), 0)
    with pytest.raises(InputError):
        repair_graph(c4(), -1)
    with pytest.raises(InputError):
        repair_graph(c4(), 1, verify="sometimes")


def test_t_must_match_the_graph():
    with pytest.raises(InputError):
        reduce_to_split(two_k2(), 0)


def test_default_t_is_the_domination_level():
    g = gen_perturbed(gen_threshold(12, 1), 1, 1)
    _, rep = repair_graph(g)
    assert rep.t == min_domination(g)


def test_split_to_matrix_degenerate_shapes():
    a, rows, cols = split_to_matrix(Graph.empty(3), SplitPartition(frozenset(), frozenset(range(3))))
    assert a.shape == (0, 3) and rows == [] and sorted(cols) == [0, 1, 2]
    a, rows, cols = split_to_matrix(Graph.complete(2), SplitPartition(frozenset({0, 1}), frozenset()))
    assert a.shape == (2, 0)


def test_split_to_matrix_rejects_bad_partition():
    with pytest.raises(InputError):
        split_to_matrix(c4(), SplitPartition(frozenset({0, 1, 2}), frozenset({3})))


def test_matrix_to_graph_examples():
    h = matrix_to_graph(M(["01", "11"]), [0, 1], [2, 3])
    # Clique {0,1}; 0 sees 3, 1 sees 2 and 3.
    assert sorted(h.edges()) == [(0, 1), (0, 3), (1, 2), (1, 3)]
    assert is_threshold(h) and is_split_half_graph(h)
    full = matrix_to_graph(BinaryMatrix.ones(2, 2), [0, 1], [2, 3])
    assert full.num_edges() == 5
    with pytest.raises(InputError):
        matrix_to_graph(M(["10", "01"]), [0, 1], [2, 3])
    with pytest.raises(InputError):
        matrix_to_graph(M(["11"]), [0], [1, 1])


@given(graphs(max_n=9))
def test_repair_is_idempotent(g):
    out, _ = repair_graph(g)
    again, rep = repair_graph(out)
    assert again == out and rep.total == 0


@given(graphs(max_n=9))
def test_stages_respect_their_bounds(g):
    t = min_domination(g)
    out, rep = repair_graph(g, t, verify="full")
    assert is_threshold(out)
    assert rep.to_split <= 2 * t
    assert rep.to_halfgraph <= 644 * t**4
    assert rep.total <= 646 * t**4
    if rep.split_graph is not None and rep.partition is not None:
        assert rep.partition.is_valid_for(rep.split_graph)
        assert is_t_dominating(rep.split_graph, t)
        a, _, _ = split_to_matrix(rep.split_graph, rep.partition)
        assert is_t_restricted(a, t)


@pytest.mark.parametrize("n", range(1, 6))
def test_repair_never_beats_the_optimum(n):
    for g in enumerate_graphs(n):
        t = min_domination(g)
        out, rep = repair_graph(g, t)
        opt = oracle_min_threshold_distance(g)
        assert opt <= rep.total <= 646 * t**4
        # A graph at distance d from a threshold graph is 2d-dominating.
        assert t <= 2 * opt


@pytest.mark.parametrize("seed", range(25))
def test_repair_on_perturbed_threshold_graphs(seed):
    d = 1 + seed % 3
    g = gen_perturbed(gen_threshold(60, seed), d, seed)
    out, rep = repair_graph(g, 2 * d, verify="full")
    assert is_threshold(out) and rep.verified
    assert rep.total <= 646 * (2 * d) ** 4


def test_report_json_layout():
    _, rep = repair_graph(c4(), 1)
    doc = rep.to_json()
    assert doc["t"] == 1
    assert doc["stage_diffs"] == {"to_split": 2, "to_halfgraph": 0, "total": 2}
    assert doc["bounds"] == {"split": 2, "matrix": 644, "total": 646}
    assert doc["verified"] == {"output_threshold": True, "bounds_hold": True}
