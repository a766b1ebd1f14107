#!/usr/bin/env python

import logging
import sys
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from .bounds import check_bound, resource_bound
from .errors import DisconnectedGraphError, ResourceBoundError

# Small graphs filter every (n-1)-edge subset; larger ones use union-find
# backtracking over edges in place of reverse-search enumeration. Both emit
# each spanning tree exactly once.
SUBSET_FILTER_MAX_EDGES = 20


@dataclass(frozen=True)
class ExactCount:
    value: int
    flags: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.value < 0:
            raise ValueError(f'negative count: {self.value}')

    def __str__(self):
        return str(self.value)

    def __int__(self):
        return self.value


@dataclass(frozen=True)
class EnumerationResult:
    count: ExactCount
    cap_exceeded: bool
    leaf_histogram: dict
    method: str


@dataclass(frozen=True)
class MlsResult:
    max_leaves: int
    witness: tuple
    count: ExactCount
    exhaustive: bool
    upper_bound: int
    n_nodes: int

    @property
    def bound_gap(self):
        return self.upper_bound - self.max_leaves


class UnionFind(object):
    def __init__(self, n):
        self.parent = list(range(n))
        self.size = [1] * n
        self.history = list()

    def find(self, x):
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        elif self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.history.append(rb)
        return True

    def rollback(self):
        rb = self.history.pop()
        ra = self.parent[rb]
        self.parent[rb] = rb
        self.size[ra] -= self.size[rb]


def laplacian_minor(graph, deleted_vertex=0):
    n = graph.n_vertices
    if not 0 <= deleted_vertex < n:
        raise ValueError(f'invalid deleted vertex: {deleted_vertex}')
    index = [v for v in range(n) if v != deleted_vertex]
    position = {v: i for i, v in enumerate(index)}
    matrix = [[0] * len(index) for _ in index]
    for v in index:
        i = position[v]
        matrix[i][i] = graph.degree(v)
        for w in graph.neighbors(v):
            if w != deleted_vertex:
                matrix[i][position[w]] = -1
    return matrix


def bareiss_determinant(matrix):
    m = [list(r) for r in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    previous = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // previous
            m[i][k] = 0
        previous = m[k][k]
    return sign * m[n - 1][n - 1]


def count_spanning_trees(graph, deleted_vertex=0, max_vertices=None):
    if graph.n_vertices < 2:
        raise ValueError(f'graph needs >= 2 vertices: {graph.n_vertices}')
    check_bound(
        'determinant_max_vertices', graph.n_vertices, override=max_vertices
    )
    if not graph.is_connected():
        return ExactCount(value=0, flags=('disconnected',))
    return ExactCount(
        value=bareiss_determinant(
            laplacian_minor(graph, deleted_vertex=deleted_vertex)
        )
    )


def tree_leaf_count(graph, edge_ids):
    degree = Counter()
    for i in edge_ids:
        degree.update(graph.edges[i].endpoints)
    return len([v for v in range(graph.n_vertices) if degree[v] == 1])


def is_spanning_tree(graph, edge_ids):
    edge_ids = list(edge_ids)
    if len(edge_ids) != graph.n_vertices - 1:
        return False
    uf = UnionFind(graph.n_vertices)
    return all(uf.union(*graph.edges[i].endpoints) for i in edge_ids)


def _connectable(graph, uf, remaining):
    roots = {uf.find(v) for v in range(graph.n_vertices)}
    if len(roots) == 1:
        return True
    parent = {r: r for r in roots}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    n_components = len(roots)
    for i in remaining:
        u, v = graph.edges[i].endpoints
        ru, rv = find(uf.find(u)), find(uf.find(v))
        if ru != rv:
            parent[ru] = rv
            n_components -= 1
            if n_components == 1:
                return True
    return False


def _iter_trees_by_subsets(graph):
    for subset in combinations(range(graph.n_edges), graph.n_vertices - 1):
        if is_spanning_tree(graph, subset):
            yield subset


def _iter_trees_by_backtracking(graph):
    uf = UnionFind(graph.n_vertices)
    chosen = list()
    n_needed = graph.n_vertices - 1

    def extend(i):
        if len(chosen) == n_needed:
            yield tuple(chosen)
            return
        elif graph.n_edges - i < n_needed - len(chosen):
            return
        u, v = graph.edges[i].endpoints
        if uf.union(u, v):
            chosen.append(i)
            yield from extend(i + 1)
            chosen.pop()
            uf.rollback()
        if _connectable(graph, uf, range(i + 1, graph.n_edges)):
            yield from extend(i + 1)

    yield from extend(0)


def enumerate_spanning_trees(graph, cap=None, histogram=True):
    logger = logging.getLogger(__name__)
    cap = resource_bound('enumerate_cap', override=cap)
    if not graph.is_connected():
        raise DisconnectedGraphError('spanning trees need a connected graph')
    if graph.n_edges <= SUBSET_FILTER_MAX_EDGES:
        method = 'subset-filter'
        trees = _iter_trees_by_subsets(graph)
    else:
        method = 'backtracking'
        trees = _iter_trees_by_backtracking(graph)
    n = 0
    leaves = Counter()
    for tree in trees:
        n += 1
        if n > cap:
            logger.info(f'enumeration cap exceeded:\t{cap}')
            return EnumerationResult(
                count=None, cap_exceeded=True, leaf_histogram=dict(),
                method=method
            )
        elif histogram:
            leaves[tree_leaf_count(graph, tree)] += 1
    return EnumerationResult(
        count=ExactCount(value=n), cap_exceeded=False,
        leaf_histogram=dict(sorted(leaves.items())), method=method
    )


def greedy_leafy_tree(graph):
    n = graph.n_vertices
    root = max(range(n), key=lambda v: (graph.degree(v), -v))
    in_tree = {root}
    edges = list()
    while len(in_tree) < n:
        best = max(
            sorted(in_tree),
            key=lambda v: len(graph.adjacency[v].keys() - in_tree)
        )
        for w in sorted(graph.adjacency[best].keys() - in_tree):
            in_tree.add(w)
            edges.append(graph.adjacency[best][w])
    return tuple(sorted(edges))


class _LeafBranchAndBound(object):
    def __init__(self, graph, budget):
        self.graph = graph
        self.budget = budget
        self.uf = UnionFind(graph.n_vertices)
        self.chosen = list()
        self.degree = [0] * graph.n_vertices
        self.n_nodes = 0
        self.complete = True
        self.best = greedy_leafy_tree(graph)
        self.best_leaves = tree_leaf_count(graph, self.best)

    def bound(self):
        return len([d for d in self.degree if d <= 1])

    def search(self, i):
        g = self.graph
        self.n_nodes += 1
        if self.n_nodes > self.budget:
            self.complete = False
            return
        elif len(self.chosen) == g.n_vertices - 1:
            leaves = self.bound()
            if leaves > self.best_leaves:
                self.best = tuple(self.chosen)
                self.best_leaves = leaves
            return
        elif self.bound() <= self.best_leaves:
            return
        elif not _connectable(g, self.uf, range(i, g.n_edges)):
            return
        u, v = g.edges[i].endpoints
        if self.uf.union(u, v):
            self.chosen.append(i)
            self.degree[u] += 1
            self.degree[v] += 1
            self.search(i + 1)
            self.degree[u] -= 1
            self.degree[v] -= 1
            self.chosen.pop()
            self.uf.rollback()
        if self.complete:
            self.search(i + 1)


def max_leaf_spanning_tree(graph, budget=None):
    logger = logging.getLogger(__name__)
    budget = resource_bound('mlst_budget', override=budget)
    if not graph.is_connected():
        raise DisconnectedGraphError('spanning trees need a connected graph')
    elif graph.n_vertices == 1:
        return MlsResult(
            max_leaves=0, witness=tuple(), count=None, exhaustive=True,
            upper_bound=0, n_nodes=0
        )
    elif graph.n_edges + 50 > sys.getrecursionlimit():
        raise ResourceBoundError(f'too many edges for search: {graph.n_edges}')
    bnb = _LeafBranchAndBound(graph, budget=budget)
    bnb.search(0)
    logger.debug(
        f'branch-and-bound nodes:\t{bnb.n_nodes}, best:\t{bnb.best_leaves}'
    )
    return MlsResult(
        max_leaves=bnb.best_leaves, witness=bnb.best, count=None,
        exhaustive=bnb.complete,
        upper_bound=(
            bnb.best_leaves if bnb.complete else graph.n_vertices - 1
        ),
        n_nodes=bnb.n_nodes
    )


def count_mls_trees(graph, cap=None):
    result = enumerate_spanning_trees(graph, cap=cap, histogram=True)
    if result.cap_exceeded:
        raise ResourceBoundError('enumeration cap exceeded')
    return ExactCount(value=result.leaf_histogram[max(result.leaf_histogram)])
