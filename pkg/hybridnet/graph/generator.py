#!/usr/bin/env python

import hashlib
import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from .bounds import check_bound
from .core import apply_growth, new_seed
from .errors import ConfigError

TRIANGLE_SCOPES = ('all-triangle-edges', 'triangle-edges-born-at-t-1')
HUB_SCOPES = ('rectangles-born-at-t-1', 'rectangles-born-in-step', 'none')
STAR_FLAGS = (
    'seed-aclinic-always', 'aclinic-of-rectangles-born-in-step',
    'aclinic-of-rectangles-born-at-t-1', 'all-old-rectangle-aclinic'
)
RECT_SCOPES = ('pendants-born-at-t-1', 'all-pendants')
APPENDIX_MODELS = ('apollonian', 'sierpinski')
TRACKED_VERTEX = 0


@dataclass(frozen=True)
class RuleConfig:
    triangle_scope: str = TRIANGLE_SCOPES[0]
    hub_scope: str = HUB_SCOPES[0]
    star_scope: frozenset = frozenset(STAR_FLAGS[:2])
    rect_scope: str = RECT_SCOPES[0]
    step2_exception: bool = True

    def __post_init__(self):
        if isinstance(self.star_scope, str):
            raise ConfigError(f'star_scope must be a set: {self.star_scope}')
        object.__setattr__(self, 'star_scope', frozenset(self.star_scope))
        for k, choices in [('triangle_scope', TRIANGLE_SCOPES),
                           ('hub_scope', HUB_SCOPES),
                           ('rect_scope', RECT_SCOPES)]:
            if getattr(self, k) not in choices:
                raise ConfigError(f'invalid {k}: {getattr(self, k)}')
        if not self.star_scope:
            raise ConfigError('star_scope is empty')
        for f in self.star_scope:
            if f not in STAR_FLAGS:
                raise ConfigError(f'invalid star_scope flag: {f}')
        if not isinstance(self.step2_exception, bool):
            raise ConfigError(
                f'step2_exception must be boolean: {self.step2_exception}'
            )

    def to_dict(self):
        return {
            'triangle_scope': self.triangle_scope,
            'hub_scope': self.hub_scope,
            'star_scope': [f for f in STAR_FLAGS if f in self.star_scope],
            'rect_scope': self.rect_scope,
            'step2_exception': self.step2_exception
        }

    @classmethod
    def from_dict(cls, d):
        if not isinstance(d, dict):
            raise ConfigError(f'config must be a mapping: {d}')
        unknown = set(d.keys()).difference(cls.__dataclass_fields__.keys())
        if unknown:
            raise ConfigError(f'unknown config keys: {sorted(unknown)}')
        return cls(**d)

    @property
    def fingerprint(self):
        canonical = json.dumps(
            self.to_dict(), sort_keys=True, separators=(',', ':')
        )
        return hashlib.sha256(canonical.encode('utf-8')).hexdigest()[:12]

    def sort_key(self):
        return (
            TRIANGLE_SCOPES.index(self.triangle_scope),
            HUB_SCOPES.index(self.hub_scope),
            tuple(sorted(STAR_FLAGS.index(f) for f in self.star_scope)),
            RECT_SCOPES.index(self.rect_scope),
            (not self.step2_exception)
        )


@dataclass(frozen=True)
class StepRecord:
    t: int
    n_vertices: int
    n_edges: int
    delta: int
    theta: int
    pendant: int
    alpha: int
    beta: int


@dataclass
class GrowthTrace:
    config_fingerprint: str
    records: list = field(default_factory=list)

    def column(self, name):
        return [getattr(r, name) for r in self.records]

    def to_dict(self):
        return {
            'config_fingerprint': self.config_fingerprint,
            'records': [vars(r) for r in self.records]
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            config_fingerprint=d['config_fingerprint'],
            records=[StepRecord(**r) for r in d['records']]
        )


@dataclass(frozen=True)
class DegreeClassRow:
    rank: int
    degree: int
    count: int


@dataclass(frozen=True)
class Anchor:
    t: int
    n_vertices: int
    n_edges: int
    n_pendants: int = None
    n_rectangles: int = None

    def matches(self, record):
        return (
            record.n_vertices == self.n_vertices
            and record.n_edges == self.n_edges
            and self.n_pendants in {None, record.pendant}
            and self.n_rectangles in {None, record.theta}
        )


@dataclass(frozen=True)
class PseudofractalClass:
    count: int
    degree: int
    triangles: int
    clustering: Fraction


def iter_rule_configs():
    star_scopes = [
        frozenset(c) for n in range(1, len(STAR_FLAGS) + 1)
        for c in combinations(STAR_FLAGS, n)
    ]
    return sorted(
        (
            RuleConfig(
                triangle_scope=a, hub_scope=b, star_scope=c, rect_scope=d,
                step2_exception=e
            ) for a, b, c, d, e in product(
                TRIANGLE_SCOPES, HUB_SCOPES, star_scopes, RECT_SCOPES,
                [True, False]
            )
        ),
        key=lambda c: c.sort_key()
    )


def _select_triangle_targets(graph, step, config):
    return [
        e.id for e in graph.edges if 'triangle-member' in e.roles and (
            config.triangle_scope == 'all-triangle-edges'
            or e.birth_step == step - 1
        )
    ]


def _select_rectangle_targets(graph, step, config):
    return [
        e.id for e in graph.edges if 'pendant' in e.roles and (
            config.rect_scope == 'all-pendants' or e.birth_step == step - 1
        )
    ]


def _select_hub_targets(graph, step, config):
    if config.hub_scope == 'none':
        return list()
    born = (step - 1 if config.hub_scope == 'rectangles-born-at-t-1' else step)
    return [r.id for r in graph.rectangles if r.birth_step == born]


def _select_star_targets(graph, step, config):
    if step == 2 and config.step2_exception:
        flags = {'seed-aclinic-always'}
    else:
        flags = config.star_scope
    targets = set()
    for r in graph.rectangles:
        if (('seed-aclinic-always' in flags and r.birth_step == 0)
                or ('aclinic-of-rectangles-born-in-step' in flags
                    and r.birth_step == step)
                or ('aclinic-of-rectangles-born-at-t-1' in flags
                    and r.birth_step == step - 1)
                or ('all-old-rectangle-aclinic' in flags
                    and r.birth_step < step)):
            targets.update(r.aclinics)
    return sorted(targets)


def _grow_one_step(graph, step, config):
    if step == 1:
        seed_edges = [e for e in graph.edges if e.origin == 'seed']
        tri_targets = [e.id for e in seed_edges if e.orientation == 'vertical']
        seeded = len(tri_targets)
        summaries = [
            apply_growth(graph, 'triangle', tri_targets, step),
            apply_growth(
                graph, 'star',
                [e.id for e in seed_edges if e.orientation == 'aclinic'], step
            )
        ]
    else:
        # later phases select on what earlier phases of the step created
        seeded = 0
        summaries = [
            apply_growth(graph, p, f(graph, step, config), step) for p, f in [
                ('triangle', _select_triangle_targets),
                ('rectangle', _select_rectangle_targets),
                ('hub', _select_hub_targets),
                ('star', _select_star_targets)
            ]
        ]
    by_phase = {s.phase: s for s in summaries}
    n_hub_triangles = (
        by_phase['hub'].n_new_triangles if 'hub' in by_phase else 0
    )
    tracked = graph.adjacency[TRACKED_VERTEX]
    return StepRecord(
        t=step, n_vertices=graph.n_vertices, n_edges=graph.n_edges,
        delta=(seeded + n_hub_triangles),
        theta=(
            by_phase['rectangle'].n_new_rectangles
            if 'rectangle' in by_phase else 0
        ),
        pendant=by_phase['star'].n_new_edges,
        alpha=len([
            i for i in tracked.values()
            if graph.edges[i].origin == 'star'
            and graph.edges[i].birth_step == step
        ]),
        beta=len([
            r for r in graph.rectangles
            if r.birth_step == step and TRACKED_VERTEX in r.corners
        ])
    )


def generate_n(t, config=None, max_t=None):
    logger = logging.getLogger(__name__)
    config = config or RuleConfig()
    if t < 0:
        raise ValueError(f'invalid t: {t}')
    check_bound('generate_n_max_t', t, override=max_t)
    graph = new_seed(kind='rectangle')
    trace = GrowthTrace(config_fingerprint=config.fingerprint)
    trace.records.append(
        StepRecord(
            t=0, n_vertices=graph.n_vertices, n_edges=graph.n_edges, delta=0,
            theta=0, pendant=0, alpha=0, beta=0
        )
    )
    for s in range(1, t + 1):
        trace.records.append(_grow_one_step(graph, s, config))
        logger.debug(f'step record:\t{trace.records[-1]}')
    graph.t = t
    return graph.freeze(), trace


def parse_anchors(data):
    rows = (data.get('anchors') if isinstance(data, dict) else data)
    if not rows:
        raise ConfigError('anchors are empty')
    anchors = list()
    for r in rows:
        try:
            if isinstance(r, Anchor):
                a = r
            elif isinstance(r, dict):
                a = Anchor(**r)
            else:
                a = Anchor(*r)
        except TypeError:
            raise ConfigError(f'malformed anchor: {r}')
        if a.t < 0 or a.n_vertices < 1 or a.n_edges < 0:
            raise ConfigError(f'invalid anchor: {r}')
        anchors.append(a)
    return anchors


def calibrate_rules(anchors, space=None, max_t=None):
    logger = logging.getLogger(__name__)
    anchors = parse_anchors(anchors)
    t_max = max(a.t for a in anchors)
    check_bound('generate_n_max_t', t_max, override=max_t)
    matches = list()
    for c in sorted(
            (iter_rule_configs() if space is None else space),
            key=lambda c: c.sort_key()
    ):
        _, trace = generate_n(t_max, config=c, max_t=t_max)
        if all(a.matches(trace.records[a.t]) for a in anchors):
            matches.append(c)
    logger.info(f'calibration matches:\t{len(matches)}')
    return matches


def generate_n1(t, max_t=None):
    if t < 0:
        raise ValueError(f'invalid t: {t}')
    check_bound('generate_n1_max_t', t, override=max_t)
    graph = new_seed(kind='single-edge')
    for s in range(1, t + 1):
        apply_growth(graph, 'triangle', range(graph.n_edges), s)
    graph.t = t
    return graph.freeze()


def appendix_degree_table(model, t):
    if t < 1:
        raise ValueError(f'invalid t: {t}')
    elif model == 'apollonian':
        return [
            DegreeClassRow(rank=r, degree=(3 * 2 ** (t - r + 1)),
                           count=(3 ** (r - 1)))
            for r in range(1, t + 2)
        ]
    elif model == 'sierpinski':
        return [
            DegreeClassRow(rank=r, degree=(3 ** (t - r + 1) + 1),
                           count=(6 if r == 1 else 3 * 6 ** (r - 1)))
            for r in range(1, t + 1)
        ]
    else:
        raise ValueError(f'invalid model: {model}')


def pseudofractal_vertex_classes(t):
    if t < 1:
        raise ValueError(f'invalid t: {t}')
    return [
        PseudofractalClass(
            count=(3 ** i), degree=(2 ** (t - i)),
            triangles=(2 ** (t - i) - 1), clustering=Fraction(2, 2 ** (t - i))
        ) for i in range(t)
    ]


def pseudofractal_degree_histogram(t):
    # the two seed vertices join the top class
    classes = pseudofractal_vertex_classes(t)
    return {
        c.degree: c.count + (2 if i == 0 else 0)
        for i, c in enumerate(classes)
    }
