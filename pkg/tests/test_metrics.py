#!/usr/bin/env python

import math
from fractions import Fraction

import networkx as nx
import pytest

from hybridnet.graph.core import new_seed
from hybridnet.graph.errors import DegenerateInputError, DisconnectedGraphError
from hybridnet.graph.generator import (DegreeClassRow, appendix_degree_table,
                                       generate_n, generate_n1)
from hybridnet.graph.metrics import (bfs_distances, clustering_report,
                                     degree_report, distance_report,
                                     loglog_slope, powerlaw_fit, zipf_report)

from conftest import to_networkx


def _corpus():
    return [generate_n(t)[0] for t in range(3)] + [
        generate_n1(t) for t in range(1, 4)
    ]


def test_degree_report_on_first_step():
    graph, _ = generate_n(1)
    report = degree_report(graph)
    assert report.histogram == {1: 4, 2: 2, 4: 4}
    assert report.average_degree == Fraction(12, 5)
    assert report.cumulative == {
        1: Fraction(1), 2: Fraction(6, 10), 4: Fraction(4, 10)
    }
    assert [(r.rank, r.degree, r.count) for r in report.classes] == [
        (1, 4, 4), (2, 2, 2), (3, 1, 4)
    ]
    assert report.degree_mass == 2 * graph.n_edges


def test_clustering_on_first_step():
    graph, _ = generate_n(1)
    report = clustering_report(graph)
    assert report.per_vertex[4] == report.per_vertex[5] == 1
    assert report.per_vertex[:4] == [Fraction(1, 6)] * 4
    assert report.average == Fraction(4, 15)
    assert float(report.average) == pytest.approx(
        nx.average_clustering(to_networkx(graph))
    )


@pytest.mark.parametrize('t', range(1, 8))
def test_average_clustering_is_proper(t):
    graph, _ = generate_n(t)
    assert 0 < clustering_report(graph).average < 1


def test_seed_distances():
    report = distance_report(new_seed(), mode='exact')
    assert report.diameter == 2
    assert report.apl == Fraction(4, 3)


@pytest.mark.parametrize('t, diameter', [(0, 2), (1, 4), (2, 6), (3, 8)])
def test_diameter(t, diameter):
    graph, _ = generate_n(t)
    assert distance_report(graph, mode='exact').diameter == diameter


def test_bfs_matches_floyd_warshall():
    for graph in _corpus():
        assert graph.n_vertices <= 30
        oracle = nx.floyd_warshall_numpy(
            to_networkx(graph), nodelist=range(graph.n_vertices)
        )
        for s in range(graph.n_vertices):
            dist = bfs_distances(graph, s)
            assert [dist[v] for v in range(graph.n_vertices)] == [
                int(d) for d in oracle[s]
            ]
        report = distance_report(graph, mode='exact')
        assert report.diameter == int(oracle.max())


def test_networkx_view_is_cached_once_frozen(make_graph):
    graph, _ = generate_n(2)
    assert graph.to_networkx() is graph.to_networkx()
    assert graph.to_networkx().number_of_edges() == graph.n_edges
    assert not make_graph(4, [(0, 1), (2, 3)]).is_connected()


def test_triangle_counts_match_networkx():
    for graph in _corpus():
        report = clustering_report(graph)
        oracle = nx.clustering(to_networkx(graph))
        assert [float(c) for c in report.per_vertex] == pytest.approx(
            [oracle[v] for v in range(graph.n_vertices)]
        )


def test_exact_apl_matches_networkx():
    graph, _ = generate_n(2)
    apl = distance_report(graph, mode='exact').apl
    assert float(apl) == pytest.approx(
        nx.average_shortest_path_length(to_networkx(graph))
    )


def test_sampled_distances():
    graph, _ = generate_n(3)
    exact = distance_report(graph, mode='exact')
    sampled = distance_report(graph, mode='sampled', n_sources=8)
    assert sampled.n_sources == 8
    assert sampled.diameter <= exact.diameter
    assert isinstance(sampled.apl, float)
    with pytest.raises(ValueError):
        distance_report(graph, mode='sampled', n_sources=1)
    with pytest.raises(ValueError):
        distance_report(graph, mode='approximate')


def test_disconnected_distances(make_graph):
    with pytest.raises(DisconnectedGraphError):
        distance_report(make_graph(3, [(0, 1)]), mode='exact')


def test_loglog_slope():
    fit = loglog_slope([1, 2, 4, 8], [1, 0.25, 0.0625, 0.015625])
    assert fit.slope == pytest.approx(-2)
    assert fit.residual == pytest.approx(0, abs=1e-12)
    assert fit.gamma == pytest.approx(3)
    with pytest.raises(DegenerateInputError):
        loglog_slope([1], [1])


@pytest.mark.parametrize('model, expected', [
    ('apollonian', -math.log(3) / math.log(2)),
    ('sierpinski', -(1 + math.log(2) / math.log(3)))
])
def test_appendix_powerlaw_slopes(model, expected):
    fit = powerlaw_fit(appendix_degree_table(model, 10))
    assert abs(fit.slope - expected) <= 0.05 * abs(expected)


@pytest.mark.parametrize('model, low, high', [
    ('apollonian', 0.40, 0.47), ('sierpinski', 0.37, 0.44)
])
def test_appendix_zipf_slopes(model, low, high):
    fit = zipf_report(appendix_degree_table(model, 10)).slope_vs_cumulative()
    assert low < fit.slope < high


def test_appendix_zipf_slopes_differ():
    apollonian, sierpinski = [
        zipf_report(appendix_degree_table(m, 10)).slope_vs_cumulative().slope
        for m in ['apollonian', 'sierpinski']
    ]
    assert apollonian > sierpinski


def test_zipf_on_first_step():
    graph, _ = generate_n(1)
    report = zipf_report(graph, lam=1.0)
    assert report.frequencies == [
        (1, Fraction(2, 3)), (2, Fraction(5, 6)), (3, Fraction(1))
    ]
    assert report.vertex_frequencies == [
        Fraction(1, 6), Fraction(1, 4), Fraction(5, 12)
    ]
    assert report.cumulative == [
        Fraction(2, 5), Fraction(3, 5), Fraction(1)
    ]
    assert report.ratio == pytest.approx([5 / 3, 25 / 18, 1])
    assert report.spread == pytest.approx(5 / 3)


@pytest.mark.parametrize('t', range(1, 6))
def test_zipf_ratio_varies_on_growth(t):
    report = zipf_report(generate_n(t)[0], lam=1.0)
    fs = [f for _, f in report.frequencies]
    assert fs == sorted(fs)
    assert fs[-1] == 1
    assert report.ratio[-1] == pytest.approx(1)
    assert all(0 < r < math.inf for r in report.ratio)
    assert report.spread > 1


@pytest.mark.parametrize('classes', [
    [DegreeClassRow(rank=1, degree=3, count=2),
     DegreeClassRow(rank=2, degree=3, count=5)],
    [DegreeClassRow(rank=1, degree=2, count=4)]
])
def test_zipf_ratio_is_one_when_frequency_is_cumulative(classes):
    report = zipf_report(classes, lam=1.0)
    assert [f for _, f in report.frequencies] == report.cumulative
    assert report.ratio == pytest.approx([1.0] * len(classes))


def test_zipf_on_regular_graph(cycle_graph):
    assert zipf_report(cycle_graph(5), lam=2.0).ratio == [1.0]


def test_zipf_on_single_edge():
    report = zipf_report(new_seed(kind='single-edge'))
    assert report.ratio == [1.0]
    with pytest.raises(DegenerateInputError):
        report.slope_vs_cumulative()
    with pytest.raises(ValueError):
        zipf_report(new_seed(), lam=0)


def test_powerlaw_fit_needs_three_classes():
    with pytest.raises(DegenerateInputError):
        powerlaw_fit(degree_report(new_seed()).classes)
