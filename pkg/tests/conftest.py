#!/usr/bin/env python

import random
from itertools import combinations

import networkx as nx
import pytest

from hybridnet.graph.core import LabeledGraph


def build_graph(n_vertices, pairs, model='test'):
    g = LabeledGraph(model=model, t=0)
    for _ in range(n_vertices):
        g.add_vertex(birth_step=0, origin='seed')
    for u, v in pairs:
        g.add_edge(
            u, v, orientation='unoriented', birth_step=0, origin='seed'
        )
    return g.freeze()


def random_connected_pairs(rng, n_vertices, p_extra=0.4):
    pairs = {
        tuple(sorted((v, rng.randrange(v)))) for v in range(1, n_vertices)
    }
    for u, v in combinations(range(n_vertices), 2):
        if (u, v) not in pairs and rng.random() < p_extra:
            pairs.add((u, v))
    return sorted(pairs)


def to_networkx(graph):
    g = nx.Graph()
    g.add_nodes_from(range(graph.n_vertices))
    g.add_edges_from(graph.edge_pairs())
    return g


@pytest.fixture
def make_graph():
    return build_graph


@pytest.fixture
def complete_graph():
    return lambda n: build_graph(n, list(combinations(range(n), 2)))


@pytest.fixture
def cycle_graph():
    return lambda n: build_graph(
        n, [tuple(sorted((i, (i + 1) % n))) for i in range(n)]
    )


@pytest.fixture
def random_graphs():
    rng = random.Random(20240611)
    return [
        build_graph(n, random_connected_pairs(rng, n))
        for n in [rng.randint(3, 8) for _ in range(20)]
    ]
