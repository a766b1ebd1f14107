#!/usr/bin/env python

import logging
from dataclasses import dataclass, field

import networkx as nx

from .errors import GrowthError

ORIGINS = ('seed', 'triangle', 'star', 'rectangle', 'hub')
ORIENTATIONS = ('vertical', 'aclinic', 'unoriented')
ROLES = ('triangle-member', 'rectangle-side', 'pendant')
PHASES = ('triangle', 'rectangle', 'hub', 'star')
SEED_KINDS = ('rectangle', 'single-edge')


@dataclass(frozen=True)
class VertexRec:
    id: int
    birth_step: int
    origin: str


@dataclass
class EdgeRec:
    id: int
    endpoints: tuple
    orientation: str
    birth_step: int
    origin: str
    roles: set = field(default_factory=set)


@dataclass(frozen=True)
class RectangleRec:
    id: int
    corners: tuple
    verticals: tuple
    aclinics: tuple
    birth_step: int

    @property
    def sides(self):
        return (*self.verticals, *self.aclinics)


@dataclass(frozen=True)
class GrowthSummary:
    phase: str
    n_targets: int
    n_new_vertices: int
    n_new_edges: int
    n_new_triangles: int
    n_new_rectangles: int


@dataclass
class ValidationReport:
    simple: bool
    connected: bool
    degree_sum_identity: bool
    adjacency_consistent: bool
    degree_sum: int
    n_edges: int
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations


class LabeledGraph(object):
    def __init__(self, model='n', t=0):
        self.model = model
        self.t = t
        self.vertices = list()
        self.edges = list()
        self.rectangles = list()
        self.adjacency = list()
        self.frozen = False
        self._nx_graph = None

    @property
    def n_vertices(self):
        return len(self.vertices)

    @property
    def n_edges(self):
        return len(self.edges)

    def degree(self, v):
        return len(self.adjacency[v])

    def degrees(self):
        return [len(a) for a in self.adjacency]

    def neighbors(self, v):
        return self.adjacency[v].keys()

    def edge_between(self, u, v):
        return self.adjacency[u].get(v)

    def edge_pairs(self):
        return [e.endpoints for e in self.edges]

    def freeze(self):
        self.frozen = True
        return self

    def _check_mutable(self):
        if self.frozen:
            raise GrowthError('graph is frozen')

    def add_vertex(self, birth_step, origin):
        self._check_mutable()
        if origin not in ORIGINS:
            raise GrowthError(f'invalid origin: {origin}')
        elif self.vertices and birth_step < self.vertices[-1].birth_step:
            raise GrowthError(f'birth step goes backwards: {birth_step}')
        v = VertexRec(
            id=len(self.vertices), birth_step=birth_step, origin=origin
        )
        self.vertices.append(v)
        self.adjacency.append(dict())
        return v.id

    def add_edge(self, u, v, orientation, birth_step, origin, roles=()):
        self._check_mutable()
        for x in (u, v):
            if not 0 <= x < len(self.vertices):
                raise GrowthError(f'unknown vertex: {x}')
        if u == v:
            raise GrowthError(f'self-loop: {u}')
        elif v in self.adjacency[u]:
            raise GrowthError(f'duplicate edge: ({u}, {v})')
        elif orientation not in ORIENTATIONS:
            raise GrowthError(f'invalid orientation: {orientation}')
        elif origin not in ORIGINS:
            raise GrowthError(f'invalid origin: {origin}')
        e = EdgeRec(
            id=len(self.edges), endpoints=(min(u, v), max(u, v)),
            orientation=orientation, birth_step=birth_step, origin=origin,
            roles=set(roles)
        )
        self.edges.append(e)
        self.adjacency[u][v] = e.id
        self.adjacency[v][u] = e.id
        return e.id

    def add_rectangle(self, corners, verticals, aclinics, birth_step):
        self._check_mutable()
        r = RectangleRec(
            id=len(self.rectangles), corners=tuple(corners),
            verticals=tuple(verticals), aclinics=tuple(aclinics),
            birth_step=birth_step
        )
        self.rectangles.append(r)
        return r.id

    def to_networkx(self):
        if self._nx_graph is not None:
            return self._nx_graph
        g = nx.Graph()
        g.add_nodes_from(range(self.n_vertices))
        g.add_edges_from(self.edge_pairs())
        if self.frozen:
            self._nx_graph = g
        return g

    def is_connected(self):
        return (not self.vertices) or nx.is_connected(self.to_networkx())


def new_seed(kind='rectangle'):
    if kind == 'rectangle':
        g = LabeledGraph(model='n', t=0)
        for _ in range(4):
            g.add_vertex(birth_step=0, origin='seed')
        sides = [
            g.add_edge(
                i, (i + 1) % 4, orientation=o, birth_step=0, origin='seed',
                roles={'rectangle-side'}
            ) for i, o in enumerate(['vertical', 'aclinic'] * 2)
        ]
        g.add_rectangle(
            corners=(0, 1, 2, 3), verticals=(sides[0], sides[2]),
            aclinics=(sides[1], sides[3]), birth_step=0
        )
    elif kind == 'single-edge':
        g = LabeledGraph(model='n1', t=0)
        for _ in range(2):
            g.add_vertex(birth_step=0, origin='seed')
        g.add_edge(0, 1, orientation='unoriented', birth_step=0, origin='seed')
    else:
        raise GrowthError(f'invalid seed kind: {kind}')
    return g


def apply_growth(graph, phase, targets, step):
    logger = logging.getLogger(__name__)
    targets = tuple(targets)
    if phase not in PHASES:
        raise GrowthError(f'invalid phase: {phase}')
    elif len(set(targets)) != len(targets):
        raise GrowthError(f'duplicate targets: {sorted(targets)}')
    n_known = len(graph.rectangles if phase == 'hub' else graph.edges)
    for i in targets:
        if not (isinstance(i, int) and 0 <= i < n_known):
            raise GrowthError(f'unknown target: {i}')
    graph._check_mutable()
    n_vertices, n_edges = graph.n_vertices, graph.n_edges
    n_rectangles = len(graph.rectangles)
    n_triangles = 0
    if phase == 'hub':
        snapshot = [graph.rectangles[i] for i in targets]
    else:
        snapshot = [(i, graph.edges[i].endpoints) for i in targets]
    if phase == 'triangle':
        for i, (u, v) in snapshot:
            w = graph.add_vertex(birth_step=step, origin='triangle')
            for x in (u, v):
                graph.add_edge(
                    x, w, orientation='unoriented', birth_step=step,
                    origin='triangle', roles={'triangle-member'}
                )
            graph.edges[i].roles.add('triangle-member')
            n_triangles += 1
    elif phase == 'star':
        for _, (u, v) in snapshot:
            for x in (u, v):
                p = graph.add_vertex(birth_step=step, origin='star')
                graph.add_edge(
                    x, p, orientation='vertical', birth_step=step,
                    origin='star', roles={'pendant'}
                )
    elif phase == 'rectangle':
        for i, (u, v) in snapshot:
            u2 = graph.add_vertex(birth_step=step, origin='rectangle')
            v2 = graph.add_vertex(birth_step=step, origin='rectangle')
            kwargs = {
                'birth_step': step, 'origin': 'rectangle',
                'roles': {'rectangle-side'}
            }
            top = graph.add_edge(u2, v2, orientation='vertical', **kwargs)
            connectors = [
                graph.add_edge(x, x2, orientation='aclinic', **kwargs)
                for x, x2 in [(u, u2), (v, v2)]
            ]
            graph.edges[i].roles.add('rectangle-side')
            graph.add_rectangle(
                corners=(u, v, v2, u2), verticals=(i, top),
                aclinics=tuple(connectors), birth_step=step
            )
    else:
        for r in snapshot:
            h = graph.add_vertex(birth_step=step, origin='hub')
            for c in r.corners:
                graph.add_edge(
                    c, h, orientation='unoriented', birth_step=step,
                    origin='hub', roles={'triangle-member'}
                )
            for s in r.sides:
                graph.edges[s].roles.add('triangle-member')
            n_triangles += 4
    assert sum(graph.degrees()) == 2 * graph.n_edges
    summary = GrowthSummary(
        phase=phase, n_targets=len(targets),
        n_new_vertices=(graph.n_vertices - n_vertices),
        n_new_edges=(graph.n_edges - n_edges),
        n_new_triangles=n_triangles,
        n_new_rectangles=(len(graph.rectangles) - n_rectangles)
    )
    logger.debug(f'growth summary:\t{summary}')
    return summary


def validate(graph):
    violations = list()
    pairs = [tuple(sorted(e.endpoints)) for e in graph.edges]
    loops = [p for p in pairs if p[0] == p[1]]
    simple = (not loops and len(set(pairs)) == len(pairs))
    if loops:
        violations.append(f'self-loops: {loops}')
    if len(set(pairs)) != len(pairs):
        violations.append(
            'duplicate edges: {}'.format(len(pairs) - len(set(pairs)))
        )
    rebuilt = [dict() for _ in graph.vertices]
    for e in graph.edges:
        u, v = e.endpoints
        if 0 <= u < len(rebuilt) and 0 <= v < len(rebuilt):
            rebuilt[u][v] = e.id
            rebuilt[v][u] = e.id
    adjacency_consistent = (
        len(graph.adjacency) == len(rebuilt)
        and all(
            set(a.keys()) == set(b.keys())
            for a, b in zip(graph.adjacency, rebuilt)
        )
    )
    if not adjacency_consistent:
        violations.append('adjacency index disagrees with the edge list')
    degree_sum = sum(graph.degrees())
    degree_sum_identity = (degree_sum == 2 * graph.n_edges)
    if not degree_sum_identity:
        violations.append(
            f'degree sum {degree_sum} != 2 * {graph.n_edges}'
        )
    connected = graph.is_connected()
    if not connected:
        violations.append('graph is disconnected')
    return ValidationReport(
        simple=simple, connected=connected,
        degree_sum_identity=degree_sum_identity,
        adjacency_consistent=adjacency_consistent, degree_sum=degree_sum,
        n_edges=graph.n_edges, violations=violations
    )
