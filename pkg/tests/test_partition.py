"""Tests for equitable partitions: refinement, validation, quotient data."""

import json

import numpy as np
import pytest

from quotientwalk.exceptions import InvalidInputError
from quotientwalk.graphs import (
    Graph,
    apex_join,
    complete_graph,
    cycle_graph,
    demo_graph,
    hypercube_graph,
    random_regular_graph,
)
from quotientwalk.partition import (
    EquitablePartition,
    _arc_arrays,
    _refinement_round,
    coarsest_equitable_partition,
    partition_to_json,
    quotient_adjacency,
    validate_equitable,
)


def random_graph(rng, n, p=0.3):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, tuple(edges))


def test_demo_graph_partition_blocks_and_degrees():
    p = coarsest_equitable_partition(demo_graph(), 0)
    assert p.blocks == ((0,), (1, 4), (2, 3))
    assert np.array_equal(
        p.quotient_degrees, np.array([[0, 2, 0], [1, 0, 2], [0, 2, 1]])
    )
    # row sums reproduce the vertex degrees in each block
    assert np.array_equal(p.block_degrees(), np.array([2, 3, 3]))


def test_demo_graph_partition_passes_brute_force_validation():
    g = demo_graph()
    p = coarsest_equitable_partition(g, 0)
    report = validate_equitable(g, p.blocks)
    assert report.valid
    assert np.array_equal(report.quotient_degrees, p.quotient_degrees)


def test_complete_graph_two_blocks():
    for n in (2, 5, 64):
        p = coarsest_equitable_partition(complete_graph(n), 0)
        assert p.blocks == ((0,), tuple(range(1, n)))
        assert np.array_equal(
            p.quotient_degrees, np.array([[0, n - 1], [1, n - 2]])
        )


def test_apex_over_random_regular_two_blocks():
    base = random_regular_graph(10, 3, seed=7)
    g = apex_join(base)
    p = coarsest_equitable_partition(g, 0)
    assert p.blocks == ((0,), tuple(range(1, 11)))
    assert np.array_equal(p.quotient_degrees, np.array([[0, 10], [1, 3]]))


def test_hypercube_partition_is_distance_partition():
    p = coarsest_equitable_partition(hypercube_graph(4), 0)
    # blocks are the Hamming-weight classes around vertex 0
    by_weight = [
        tuple(v for v in range(16) if bin(v).count("1") == w) for w in range(5)
    ]
    assert p.blocks == tuple(by_weight)
    assert p.num_blocks == 5


def test_marked_vertex_choice_changes_blocks():
    g = Graph(3, ((0, 1), (1, 2)))  # path: ends symmetric, middle is not
    p0 = coarsest_equitable_partition(g, 0)
    p1 = coarsest_equitable_partition(g, 1)
    assert p0.blocks == ((0,), (1,), (2,))
    assert p1.blocks == ((1,), (0, 2))
    assert p1.marked == 1
    with pytest.raises(InvalidInputError):
        coarsest_equitable_partition(g, 3)


def test_single_vertex_graph():
    p = coarsest_equitable_partition(Graph(1, ()), 0)
    assert p.blocks == ((0,),)
    assert np.array_equal(p.quotient_degrees, np.zeros((1, 1), dtype=int))


def test_refinement_is_idempotent_on_stable_colorings():
    for g in (demo_graph(), hypercube_graph(3), complete_graph(6), cycle_graph(8)):
        p = coarsest_equitable_partition(g, 0)
        colors = np.empty(g.n, dtype=np.int64)
        for i, block in enumerate(p.blocks):
            colors[list(block)] = i
        u_arr, v_arr = _arc_arrays(g)
        again, _ = _refinement_round(g.n, u_arr, v_arr, colors)
        assert np.array_equal(again, colors)


def test_validate_accepts_singleton_partition():
    g = demo_graph()
    singletons = [(v,) for v in range(g.n)]
    report = validate_equitable(g, singletons)
    assert report.valid
    assert np.array_equal(report.quotient_degrees, g.adjacency_matrix().astype(int))


def test_validate_finer_than_coarsest_is_still_equitable():
    report = validate_equitable(complete_graph(4), [(0,), (1, 2), (3,)])
    assert report.valid
    assert np.array_equal(
        report.quotient_degrees, np.array([[0, 2, 1], [1, 1, 1], [1, 2, 0]])
    )


def test_validate_rejects_unbalanced_blocks():
    report = validate_equitable(demo_graph(), [(0,), (1, 2), (3, 4)])
    assert not report.valid
    assert report.violation is not None
    vertex, block = report.violation
    assert vertex in (1, 2, 3, 4)


def test_validate_rejects_structural_problems():
    g = complete_graph(3)
    assert not validate_equitable(g, []).valid
    assert not validate_equitable(g, [(0, 1), (2,)]).valid  # block 0 not singleton
    assert not validate_equitable(g, [(0,), (1,)]).valid  # missing vertex
    assert not validate_equitable(g, [(0,), (1, 2), (2,)]).valid  # overlap
    assert not validate_equitable(g, [(0,), (1, 2), ()]).valid  # empty block


def test_merging_blocks_of_coarsest_breaks_equitability():
    g = demo_graph()
    p = coarsest_equitable_partition(g, 0)
    merged = [p.blocks[0], p.blocks[1] + p.blocks[2]]
    assert not validate_equitable(g, merged).valid


def test_random_graphs_coarsest_is_valid_and_arc_symmetric():
    rng = np.random.default_rng(2024)
    for trial in range(100):
        n = int(rng.integers(2, 41))
        g = random_graph(rng, n, p=float(rng.uniform(0.1, 0.7)))
        marked = int(rng.integers(0, n))
        p = coarsest_equitable_partition(g, marked)
        report = validate_equitable(g, p.blocks)
        assert report.valid, f"trial {trial}: {report.message}"
        assert np.array_equal(report.quotient_degrees, p.quotient_degrees)
        # arc-count symmetry holds exactly in integers
        sizes = p.block_sizes
        weighted = sizes[:, None] * p.quotient_degrees
        assert np.array_equal(weighted, weighted.T)
        assert p.blocks[0] == (marked,)


def test_partition_constructor_enforces_invariants():
    with pytest.raises(InvalidInputError):
        EquitablePartition(blocks=((0, 1),), quotient_degrees=np.zeros((1, 1)))
    with pytest.raises(InvalidInputError):
        EquitablePartition(blocks=((0,), (1, 2)), quotient_degrees=np.zeros((3, 3)))
    with pytest.raises(InvalidInputError):
        # arc-count symmetry violated: 1*2 != 2*0
        EquitablePartition(
            blocks=((0,), (1, 2)), quotient_degrees=np.array([[0, 2], [0, 1]])
        )


def test_quotient_adjacency_demo_graph():
    p = coarsest_equitable_partition(demo_graph(), 0)
    expected = np.array(
        [
            [0.0, np.sqrt(2.0), 0.0],
            [np.sqrt(2.0), 0.0, 2.0],
            [0.0, 2.0, 1.0],
        ]
    )
    assert np.abs(quotient_adjacency(p) - expected).max() < 1e-15


def test_quotient_adjacency_two_block_family():
    for n, d in ((9, 2), (64, 62)):
        base = complete_graph(n - 1) if d == n - 2 else cycle_graph(n - 1)
        p = coarsest_equitable_partition(apex_join(base), 0)
        expected = np.array([[0.0, np.sqrt(n - 1.0)], [np.sqrt(n - 1.0), float(d)]])
        assert np.abs(quotient_adjacency(p) - expected).max() < 1e-12


def test_partition_json_shape():
    p = coarsest_equitable_partition(demo_graph(), 0)
    doc = json.loads(partition_to_json(p))
    assert doc["schema"] == 1
    assert doc["blocks"] == [[0], [1, 4], [2, 3]]
    assert doc["quotient_degrees"] == [[0, 2, 0], [1, 0, 2], [0, 2, 1]]
    # deterministic output
    assert partition_to_json(p) == partition_to_json(coarsest_equitable_partition(demo_graph(), 0))
