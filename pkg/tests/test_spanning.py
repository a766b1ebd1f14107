#!/usr/bin/env python

import networkx as nx
import pytest

from hybridnet.graph.errors import DisconnectedGraphError, ResourceBoundError
from hybridnet.graph.generator import generate_n, generate_n1
from hybridnet.graph.spanning import (_iter_trees_by_backtracking,
                                      _iter_trees_by_subsets,
                                      bareiss_determinant, count_mls_trees,
                                      count_spanning_trees,
                                      enumerate_spanning_trees,
                                      is_spanning_tree, max_leaf_spanning_tree,
                                      tree_leaf_count)


@pytest.mark.parametrize('matrix, expected', [
    ([], 1), ([[5]], 5), ([[2, -1], [-1, 2]], 3), ([[0, 1], [1, 0]], -1),
    ([[1, 2], [2, 4]], 0), ([[2, 0, 1], [1, 3, 2], [1, 1, 2]], 6),
    ([[0, 0, 1], [0, 1, 0], [1, 0, 0]], -1)
])
def test_bareiss_determinant(matrix, expected):
    assert bareiss_determinant(matrix) == expected


def test_small_counts(complete_graph, cycle_graph):
    assert count_spanning_trees(complete_graph(3)).value == 3
    assert count_spanning_trees(cycle_graph(4)).value == 4
    assert count_spanning_trees(complete_graph(4)).value == 16
    assert count_spanning_trees(complete_graph(5)).value == 125


def test_first_step_count():
    graph, _ = generate_n(1)
    assert count_spanning_trees(graph).value == 30
    result = enumerate_spanning_trees(graph)
    assert int(result.count) == 30
    assert result.leaf_histogram == {4: 2, 5: 12, 6: 16}


def test_count_matches_enumeration(complete_graph, cycle_graph,
                                   random_graphs):
    graphs = [
        complete_graph(3), cycle_graph(4), complete_graph(4),
        generate_n(1)[0], generate_n1(2), *random_graphs
    ]
    for g in graphs:
        result = enumerate_spanning_trees(g)
        assert not result.cap_exceeded
        assert count_spanning_trees(g).value == result.count.value


def test_deleted_vertex_invariance(random_graphs):
    for g in random_graphs[:10]:
        counts = {
            count_spanning_trees(g, deleted_vertex=v).value
            for v in range(g.n_vertices)
        }
        assert len(counts) == 1


def test_enumeration_strategies_agree(random_graphs):
    for g in [g for g in random_graphs if g.n_edges <= 16]:
        subsets = list(_iter_trees_by_subsets(g))
        backtracking = list(_iter_trees_by_backtracking(g))
        assert sorted(subsets) == sorted(backtracking)
        assert all(is_spanning_tree(g, tree) for tree in backtracking)


def test_backtracking_on_ladder(make_graph):
    n = 8
    ladder = make_graph(
        2 * n, [
            *[(i, n + i) for i in range(n)],
            *[(i, i + 1) for i in range(n - 1)],
            *[(n + i, n + i + 1) for i in range(n - 1)]
        ]
    )
    assert ladder.n_edges > 20
    result = enumerate_spanning_trees(ladder, histogram=False)
    assert result.method == 'backtracking'
    assert result.count.value == count_spanning_trees(ladder).value == 10864


def test_disconnected_and_degenerate(make_graph, complete_graph):
    disconnected = make_graph(4, [(0, 1), (2, 3)])
    count = count_spanning_trees(disconnected)
    assert count.value == 0
    assert count.flags == ('disconnected',)
    with pytest.raises(DisconnectedGraphError):
        enumerate_spanning_trees(disconnected)
    with pytest.raises(DisconnectedGraphError):
        max_leaf_spanning_tree(disconnected)
    with pytest.raises(ValueError):
        count_spanning_trees(make_graph(1, []))
    with pytest.raises(ResourceBoundError):
        count_spanning_trees(complete_graph(4), max_vertices=3)


def test_enumeration_cap(complete_graph):
    result = enumerate_spanning_trees(complete_graph(4), cap=5)
    assert result.cap_exceeded
    assert result.count is None
    with pytest.raises(ResourceBoundError):
        count_mls_trees(complete_graph(4), cap=5)


def test_complete_graph_leaves(complete_graph):
    k4 = complete_graph(4)
    assert enumerate_spanning_trees(k4).leaf_histogram == {2: 12, 3: 4}
    result = max_leaf_spanning_tree(k4)
    assert result.max_leaves == 3
    assert result.exhaustive
    assert result.upper_bound == 3
    assert count_mls_trees(k4).value == 4


def test_max_leaves_on_first_step():
    graph, _ = generate_n(1)
    result = max_leaf_spanning_tree(graph)
    assert result.max_leaves == 6
    assert result.exhaustive
    assert result.bound_gap == 0
    assert is_spanning_tree(graph, result.witness)
    assert tree_leaf_count(graph, result.witness) == 6
    histogram = enumerate_spanning_trees(graph).leaf_histogram
    assert result.max_leaves == max(histogram)
    assert count_mls_trees(graph).value == histogram[max(histogram)] == 16


def test_max_leaves_small_graphs(make_graph, cycle_graph):
    assert max_leaf_spanning_tree(cycle_graph(4)).max_leaves == 2
    star = make_graph(6, [(0, v) for v in range(1, 6)])
    assert max_leaf_spanning_tree(star).max_leaves == 5
    assert count_mls_trees(star).value == 1
    assert max_leaf_spanning_tree(make_graph(1, [])).max_leaves == 0


def test_max_leaves_budget():
    graph, _ = generate_n(2)
    result = max_leaf_spanning_tree(graph, budget=1)
    assert not result.exhaustive
    assert result.upper_bound == graph.n_vertices - 1
    assert is_spanning_tree(graph, result.witness)
    assert result.max_leaves == tree_leaf_count(graph, result.witness)


def test_witness_edges_are_bridges():
    graph, _ = generate_n(1)
    witness = max_leaf_spanning_tree(graph).witness
    for i in witness:
        forest = nx.Graph()
        forest.add_nodes_from(range(graph.n_vertices))
        forest.add_edges_from(
            graph.edges[j].endpoints for j in witness if j != i
        )
        assert nx.number_connected_components(forest) == 2
