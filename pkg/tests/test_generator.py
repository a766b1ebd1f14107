#!/usr/bin/env python

from collections import Counter

import pytest

from hybridnet.cli.util import load_default_dict
from hybridnet.graph.closedform import predict_n1
from hybridnet.graph.core import validate
from hybridnet.graph.errors import ConfigError, ResourceBoundError
from hybridnet.graph.generator import (Anchor, GrowthTrace, RuleConfig,
                                       appendix_degree_table, calibrate_rules,
                                       generate_n, generate_n1,
                                       iter_rule_configs, parse_anchors,
                                       pseudofractal_degree_histogram)


@pytest.mark.parametrize('t, n_vertices, n_edges', [
    (0, 4, 4), (1, 10, 12), (2, 28, 40), (3, 78, 124), (4, 292, 456)
])
def test_default_counts(t, n_vertices, n_edges):
    graph, trace = generate_n(t)
    assert (graph.n_vertices, graph.n_edges) == (n_vertices, n_edges)
    assert trace.records[-1].n_vertices == n_vertices
    assert graph.frozen
    assert validate(graph).ok


def test_trace_columns():
    _, trace = generate_n(3)
    assert trace.column('t') == [0, 1, 2, 3]
    assert trace.column('pendant') == [0, 4, 4, 20]
    assert trace.column('theta') == [0, 0, 4, 4]
    assert trace.column('delta') == [0, 2, 0, 16]
    assert trace.column('alpha') == [0, 1, 1, 2]
    assert trace.column('beta') == [0, 0, 1, 1]
    assert GrowthTrace.from_dict(trace.to_dict()) == trace


@pytest.mark.parametrize('t', range(8))
def test_degree_sum_identity(t):
    graph, _ = generate_n(t)
    assert sum(graph.degrees()) == 2 * graph.n_edges


def test_generation_is_deterministic():
    g1, t1 = generate_n(3)
    g2, t2 = generate_n(3)
    assert g1.edge_pairs() == g2.edge_pairs()
    assert t1 == t2


def test_generation_bound():
    with pytest.raises(ResourceBoundError):
        generate_n(9)
    with pytest.raises(ValueError):
        generate_n(-1)
    graph, _ = generate_n(2, max_t=2)
    assert graph.n_vertices == 28


def test_default_rule_config_file():
    assert RuleConfig.from_dict(
        load_default_dict(stem='default_rules')
    ) == RuleConfig()


def test_fingerprint():
    c = RuleConfig()
    assert len(c.fingerprint) == 12
    assert int(c.fingerprint, 16) >= 0
    assert c.fingerprint == RuleConfig.from_dict(c.to_dict()).fingerprint
    assert c.fingerprint != RuleConfig(rect_scope='all-pendants').fingerprint


@pytest.mark.parametrize('kwargs', [
    {'triangle_scope': 'some-edges'}, {'hub_scope': 'all'},
    {'star_scope': frozenset()}, {'star_scope': 'seed-aclinic-always'},
    {'star_scope': {'unknown-flag'}}, {'step2_exception': 'yes'}
])
def test_invalid_rule_config(kwargs):
    with pytest.raises(ConfigError):
        RuleConfig(**kwargs)


def test_rule_config_rejects_unknown_keys():
    with pytest.raises(ConfigError):
        RuleConfig.from_dict({'triangle_scope': 'all-triangle-edges', 'x': 1})


def test_rule_config_space():
    configs = iter_rule_configs()
    assert len(configs) == 360
    assert len({c.fingerprint for c in configs}) == 360
    assert [c.sort_key() for c in configs] == sorted(
        c.sort_key() for c in configs
    )


def test_calibration_with_hand_counts():
    matches = calibrate_rules(load_default_dict(stem='anchors'))
    assert len(matches) == 11
    assert matches[0] == RuleConfig()


def test_calibration_edge_cases():
    assert len(calibrate_rules([Anchor(t=0, n_vertices=4, n_edges=4)])) == 360
    assert calibrate_rules([(3, 78, 125)]) == list()
    with pytest.raises(ConfigError):
        parse_anchors({'anchors': []})
    with pytest.raises(ConfigError):
        parse_anchors([{'t': -1, 'n_vertices': 4, 'n_edges': 4}])


@pytest.mark.parametrize('t', range(1, 9))
def test_n1_matches_closed_form(t):
    graph = generate_n1(t)
    assert (graph.n_vertices, graph.n_edges) == predict_n1(t)


@pytest.mark.parametrize('t', range(1, 6))
def test_n1_degree_classes(t):
    graph = generate_n1(t)
    assert dict(Counter(graph.degrees())) == pseudofractal_degree_histogram(t)


def test_appendix_tables():
    apollonian = appendix_degree_table('apollonian', 2)
    assert [(r.degree, r.count) for r in apollonian] == [
        (12, 1), (6, 3), (3, 9)
    ]
    sierpinski = appendix_degree_table('sierpinski', 2)
    assert [(r.degree, r.count) for r in sierpinski] == [(10, 6), (4, 18)]
    with pytest.raises(ValueError):
        appendix_degree_table('koch', 2)
