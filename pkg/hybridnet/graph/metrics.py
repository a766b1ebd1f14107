#!/usr/bin/env python

import logging
import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

import networkx as nx
import numpy as np

from .bounds import check_bound
from .core import LabeledGraph
from .errors import DegenerateInputError, DisconnectedGraphError
from .generator import DegreeClassRow


@dataclass(frozen=True)
class DegreeReport:
    histogram: dict
    classes: list
    average_degree: Fraction
    cumulative: dict
    n_vertices: int
    n_edges: int

    @property
    def degree_mass(self):
        return sum(k * n for k, n in self.histogram.items())


@dataclass(frozen=True)
class LogLogFit:
    slope: float
    intercept: float
    residual: float
    n_points: int

    @property
    def gamma(self):
        return 1 - self.slope


@dataclass(frozen=True)
class ZipfReport:
    frequencies: list
    vertex_frequencies: list
    cumulative: list
    degrees: list
    ratio: list
    lam: float

    @property
    def spread(self):
        return max(self.ratio) / min(self.ratio)

    def slope_vs_degree(self):
        return loglog_slope(
            self.degrees, [float(f) for _, f in self.frequencies]
        )

    def slope_vs_cumulative(self):
        return loglog_slope(
            [float(p) for p in self.cumulative],
            [float(f) for _, f in self.frequencies]
        )


@dataclass(frozen=True)
class ClusteringReport:
    per_vertex: list
    triangles: list
    average: Fraction


@dataclass(frozen=True)
class DistanceReport:
    diameter: int
    apl: object
    method: str
    n_sources: int
    eccentricities: dict = field(default_factory=dict)


def degree_classes(histogram):
    return [
        DegreeClassRow(rank=i, degree=k, count=histogram[k])
        for i, k in enumerate(sorted(histogram, reverse=True), start=1)
    ]


def degree_report(graph):
    if graph.n_vertices < 1:
        raise ValueError('graph has no vertices')
    histogram = dict(sorted(Counter(graph.degrees()).items()))
    cumulative = dict()
    n_at_least = 0
    for k in sorted(histogram, reverse=True):
        n_at_least += histogram[k]
        cumulative[k] = Fraction(n_at_least, graph.n_vertices)
    return DegreeReport(
        histogram=histogram, classes=degree_classes(histogram),
        average_degree=Fraction(2 * graph.n_edges, graph.n_vertices),
        cumulative=dict(sorted(cumulative.items())),
        n_vertices=graph.n_vertices, n_edges=graph.n_edges
    )


def loglog_slope(xs, ys):
    x = np.log(np.asarray(xs, dtype=float))
    y = np.log(np.asarray(ys, dtype=float))
    if x.size < 2:
        raise DegenerateInputError(f'too few points to fit: {x.size}')
    slope, intercept = np.polyfit(x, y, 1)
    residual = float(np.sqrt(np.mean((y - (slope * x + intercept)) ** 2)))
    return LogLogFit(
        slope=float(slope), intercept=float(intercept), residual=residual,
        n_points=int(x.size)
    )


def _sorted_classes(classes):
    rows = sorted(
        (r for r in classes if r.count > 0), key=lambda r: -r.degree
    )
    if not rows:
        raise DegenerateInputError('degree classes are empty')
    return rows


def _head_sums(values):
    total = 0
    for v in values:
        total += v
        yield total


def powerlaw_fit(classes):
    rows = _sorted_classes(classes)
    if len(rows) < 3:
        raise DegenerateInputError(
            f'power-law fit needs at least 3 classes: {len(rows)}'
        )
    n_vertices = sum(r.count for r in rows)
    return loglog_slope(
        [r.degree for r in rows],
        [n / n_vertices for n in _head_sums(r.count for r in rows)]
    )


def zipf_report(source, lam=1.0):
    logger = logging.getLogger(__name__)
    if lam <= 0:
        raise ValueError(f'lambda must be positive: {lam}')
    rows = _sorted_classes(
        degree_report(source).classes if isinstance(source, LabeledGraph)
        else source
    )
    n_vertices = sum(r.count for r in rows)
    mass = sum(r.degree * r.count for r in rows)
    # head sums over classes of equal or higher degree
    frequencies = [
        (r.rank, Fraction(m, mass))
        for r, m in zip(rows, _head_sums(r.degree * r.count for r in rows))
    ]
    cumulative = [
        Fraction(n, n_vertices) for n in _head_sums(r.count for r in rows)
    ]
    ratio = [
        float(f) ** lam / float(p)
        for (_, f), p in zip(frequencies, cumulative)
    ]
    logger.debug(f'zipf ratio:\t{ratio}')
    return ZipfReport(
        frequencies=frequencies,
        vertex_frequencies=[
            Fraction(n, mass) for n in _head_sums(r.count for r in rows)
        ],
        cumulative=cumulative, degrees=[r.degree for r in rows], ratio=ratio,
        lam=lam
    )


def clustering_report(graph):
    triangles = nx.triangles(graph.to_networkx())
    per_vertex = list()
    numerators = defaultdict(int)
    for v in range(graph.n_vertices):
        k = graph.degree(v)
        if k < 2:
            per_vertex.append(Fraction(0))
        else:
            per_vertex.append(Fraction(triangles[v], k * (k - 1) // 2))
            numerators[k * (k - 1) // 2] += triangles[v]
    total = sum(
        (Fraction(n, d) for d, n in numerators.items()), Fraction(0)
    )
    return ClusteringReport(
        per_vertex=per_vertex,
        triangles=[triangles[v] for v in range(graph.n_vertices)],
        average=(
            total / graph.n_vertices if graph.n_vertices else Fraction(0)
        )
    )


def bfs_distances(graph, source):
    return dict(
        nx.single_source_shortest_path_length(graph.to_networkx(), source)
    )


def sample_sources(n_vertices, n_sources):
    step = math.ceil(n_vertices / n_sources)
    return list(range(0, n_vertices, step))


def distance_report(graph, mode='exact', n_sources=None, max_vertices=None):
    n = graph.n_vertices
    if mode == 'exact':
        check_bound('exact_distance_max_vertices', n, override=max_vertices)
        sources = list(range(n))
    elif mode == 'sampled':
        if n_sources is None or n_sources < 2:
            raise ValueError(f'sampled mode needs n_sources >= 2: {n_sources}')
        sources = sample_sources(n, n_sources)
    else:
        raise ValueError(f'invalid mode: {mode}')
    g = graph.to_networkx()
    eccentricities = dict()
    total = 0
    for s in sources:
        dist = nx.single_source_shortest_path_length(g, s)
        if len(dist) != n:
            raise DisconnectedGraphError(f'vertex {s} reaches {len(dist)}/{n}')
        eccentricities[s] = max(dist.values())
        total += sum(dist.values())
    diameter = max(eccentricities.values(), default=0)
    if n < 2:
        apl = Fraction(0)
    elif mode == 'exact':
        apl = Fraction(total // 2, n * (n - 1) // 2)
    else:
        apl = total / (len(sources) * (n - 1))
    return DistanceReport(
        diameter=diameter, apl=apl, method=mode, n_sources=len(sources),
        eccentricities=eccentricities
    )
