#!/usr/bin/env python

import json
import logging
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .. import __version__
from .bounds import check_bound, resource_bound
from .closedform import (AVERAGE_DEGREE_LIMIT, PowerProduct, alpha_beta,
                         pendant_count, predict_average_degree,
                         predict_clustering, predict_counts,
                         predict_degree_table, predict_max_leaves,
                         predict_spanning)
from .errors import DegenerateInputError, ResourceBoundError
from .generator import RuleConfig, generate_n
from .metrics import (clustering_report, degree_report, distance_report,
                      powerlaw_fit, zipf_report)
from .spanning import (count_mls_trees, count_spanning_trees,
                       max_leaf_spanning_tree)

REPORT_SCHEMA_VERSION = 1
STATUSES = ('match', 'mismatch', 'report-only', 'not-applicable')
CHECK_GROUPS = (
    'counts', 'degrees', 'zipf', 'clustering', 'distances', 'spanning',
    'mlst'
)
HARD_ANCHOR_MAX_T = 3
LINEAR_DIAMETER_INCREMENTS = (1, 2)
DIAMETER_INCREMENTS = (1, 2, 4)
JSON_SAFE_INT = 2 ** 53


@dataclass
class ReportItem:
    group: str
    name: str
    provenance: str
    predicted: object = None
    measured: object = None
    status: str = 'report-only'
    hard: bool = False
    residual: object = None
    agrees: bool = None
    note: str = ''

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f'invalid status: {self.status}')

    def to_dict(self):
        return {k: encode_value(v) for k, v in vars(self).items()}

    @classmethod
    def from_dict(cls, d):
        return cls(**{
            k: (v if k in {'group', 'name', 'provenance', 'status', 'note'}
                else decode_value(v))
            for k, v in d.items()
        })


@dataclass
class DiscrepancyReport:
    model: str
    t: int
    config_fingerprint: str
    groups: list
    items: list = field(default_factory=list)
    tool_version: str = __version__
    schema_version: int = REPORT_SCHEMA_VERSION

    @property
    def hard_failures(self):
        return [i for i in self.items if i.hard and i.status == 'mismatch']

    def summary(self):
        return {s: len([i for i in self.items if i.status == s])
                for s in STATUSES}

    def to_dict(self):
        return {
            'schema_version': self.schema_version,
            'tool_version': self.tool_version, 'model': self.model,
            't': self.t, 'config_fingerprint': self.config_fingerprint,
            'groups': list(self.groups),
            'items': [i.to_dict() for i in self.items]
        }

    @classmethod
    def from_dict(cls, d):
        if d.get('schema_version') != REPORT_SCHEMA_VERSION:
            raise ValueError(
                'unsupported report schema: {}'.format(d.get('schema_version'))
            )
        return cls(
            model=d['model'], t=d['t'],
            config_fingerprint=d['config_fingerprint'],
            groups=list(d['groups']),
            items=[ReportItem.from_dict(i) for i in d['items']],
            tool_version=d['tool_version'],
            schema_version=d['schema_version']
        )

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + '\n'

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


@dataclass
class CheckContext:
    t: int
    graph: object
    trace: object
    config: RuleConfig
    lam: float = 1.0
    bounds: dict = field(default_factory=dict)

    def bound(self, name):
        return resource_bound(name, override=self.bounds.get(name))

    def check(self, name, value):
        return check_bound(name, value, override=self.bounds.get(name))


def encode_value(value):
    if value is None or isinstance(value, (bool, str, float)):
        return value
    elif isinstance(value, int):
        return (value if abs(value) < JSON_SAFE_INT else str(value))
    elif isinstance(value, Fraction):
        if value.denominator == 1:
            return encode_value(value.numerator)
        else:
            return f'{value.numerator}/{value.denominator}'
    elif isinstance(value, PowerProduct):
        return {'log2': value.log2, 'factors': value.to_dict()}
    elif isinstance(value, (list, tuple)):
        return [encode_value(v) for v in value]
    elif isinstance(value, dict):
        return {str(k): encode_value(v) for k, v in value.items()}
    else:
        raise TypeError(f'cannot encode: {value!r}')


def decode_value(value):
    if isinstance(value, str):
        if re.fullmatch(r'-?\d+', value):
            return int(value)
        elif re.fullmatch(r'-?\d+/\d+', value):
            return Fraction(value)
        else:
            return value
    elif isinstance(value, list):
        return [decode_value(v) for v in value]
    elif isinstance(value, dict):
        if set(value) == {'log2', 'factors'}:
            return PowerProduct(
                {int(b): e for b, e in value['factors'].items()}
            )
        return {k: decode_value(v) for k, v in value.items()}
    else:
        return value


def _is_number(value):
    return (
        isinstance(value, (int, float, Fraction))
        and not isinstance(value, bool)
    )


def _agree(predicted, measured):
    if predicted is None or measured is None:
        return None
    elif isinstance(predicted, float) or isinstance(measured, float):
        return math.isclose(
            float(predicted), float(measured), rel_tol=1e-9, abs_tol=1e-12
        )
    else:
        return predicted == measured


def compare(group, name, provenance, predicted, measured, hard=False,
            agrees=None, note=''):
    if isinstance(predicted, PowerProduct):
        predicted = predicted.materialize()
    agrees = (_agree(predicted, measured) if agrees is None else agrees)
    if hard:
        status = ('match' if agrees else 'mismatch')
    else:
        status = 'report-only'
    residual = (
        measured - predicted
        if _is_number(predicted) and _is_number(measured) else None
    )
    return ReportItem(
        group=group, name=name, provenance=provenance, predicted=predicted,
        measured=measured, status=status, hard=hard, residual=residual,
        agrees=agrees, note=note
    )


def not_applicable(group, name, note):
    return ReportItem(
        group=group, name=name, provenance='none', status='not-applicable',
        note=note
    )


def check_counts(ctx):
    t = ctx.t
    graph = ctx.graph
    record = ctx.trace.records[t]
    c = predict_counts(t)
    hard = (t <= HARD_ANCHOR_MAX_T)
    source = (
        'hand count of the first growth steps' if c.source == 'hand-count'
        else 'closed-form vertex and edge counts'
    )
    items = [
        compare('counts', 'n_vertices', source, c.n_vertices,
                graph.n_vertices, hard=hard),
        compare('counts', 'n_edges', source, c.n_edges, graph.n_edges,
                hard=hard),
        compare('counts', 'average_degree', 'closed-form 2|E|/|V|',
                predict_average_degree(t),
                Fraction(2 * graph.n_edges, graph.n_vertices), hard=hard),
        compare('counts', 'pendant_count', 'pendant recurrence L(t)',
                pendant_count(t), record.pendant, hard=hard),
        compare('counts', 'average_degree_limit',
                'limit of the average degree', AVERAGE_DEGREE_LIMIT,
                Fraction(2 * graph.n_edges, graph.n_vertices),
                note='large-t limit against a finite graph')
    ]
    if t >= 1:
        items.extend([
            compare('counts', 'theta_general',
                    'growth table, general row Theta(t) = L(t-1)',
                    c.theta_general, record.theta,
                    hard=(2 <= t <= HARD_ANCHOR_MAX_T)),
            compare('counts', 'theta_row_literal',
                    'growth table, printed rows', c.theta_row_literal,
                    record.theta,
                    note=('conventions disagree' if c.theta_conflict else '')),
            compare('counts', 'delta_general',
                    'growth table, general row Delta(t) = 2L(t-1)',
                    c.delta_general, record.delta),
            compare('counts', 'delta_row_literal',
                    'growth table, printed rows', c.delta_row_literal,
                    record.delta,
                    note=('conventions disagree' if c.delta_conflict else ''))
        ])
        alpha, beta = alpha_beta(t, adjusted=True)
        items.extend([
            compare('counts', 'alpha_tracked_vertex',
                    'adjusted Fibonacci alpha column', alpha[-1],
                    record.alpha, note='pendants gained by a seed corner'),
            compare('counts', 'beta_tracked_vertex',
                    'adjusted Fibonacci beta column', beta[-1], record.beta,
                    note='rectangles gained by a seed corner')
        ])
    else:
        items.append(
            not_applicable('counts', 'growth_table', 'no growth step at t=0')
        )
    return items


def check_degrees(ctx):
    t = ctx.t
    graph = ctx.graph
    report = degree_report(graph)
    items = [
        compare('degrees', 'degree_mass_identity',
                'sum of degree times count equals 2|E|', 2 * graph.n_edges,
                report.degree_mass, hard=True),
        compare('degrees', 'cumulative_at_min_degree',
                'P_cum(k_min) = 1', Fraction(1),
                report.cumulative[min(report.cumulative)], hard=True)
    ]
    if t >= 3:
        table = predict_degree_table(t)
        items.extend([
            compare('degrees', 'degree_table_mass',
                    'degree-class table, sum of degree times count',
                    table.degree_mass, 2 * graph.n_edges, hard=(t == 3)),
            compare('degrees', 'degree_table_vertex_sum',
                    'degree-class table, sum of counts', table.vertex_sum,
                    graph.n_vertices,
                    note='row counts do not add up to |V|'),
            compare('degrees', 'degree_table_rows', 'degree-class table',
                    [[r.degree, r.count] for r in table.rows],
                    [[r.degree, r.count] for r in report.classes])
        ])
    else:
        items.append(
            not_applicable(
                'degrees', 'degree_table', 'degree table needs t >= 3'
            )
        )
    try:
        fit = powerlaw_fit(report.classes)
    except DegenerateInputError as e:
        items.append(not_applicable('degrees', 'powerlaw_slope', str(e)))
    else:
        items.append(
            compare('degrees', 'powerlaw_slope',
                    'scale-free exponent gamma = 3, slope 1 - gamma', -2.0,
                    fit.slope, note=f'fit over {fit.n_points} classes')
        )
    return items


def check_zipf(ctx):
    report = zipf_report(ctx.graph, lam=ctx.lam)
    items = [
        compare('zipf', 'zipf_ratio_spread',
                'constant ratio f_r^lambda / P_cum', 1.0, report.spread,
                note=f'lambda={ctx.lam}')
    ]
    try:
        fit = report.slope_vs_cumulative()
    except DegenerateInputError as e:
        items.append(
            not_applicable('zipf', 'zipf_slope_vs_cumulative', str(e))
        )
    else:
        items.append(
            compare('zipf', 'zipf_slope_vs_cumulative',
                    'rank frequency tracks the cumulative degree tail', 1.0,
                    fit.slope)
        )
    return items


def check_clustering(ctx):
    t = ctx.t
    if t < 1:
        return [
            not_applicable(
                'clustering', 'average_clustering', 'seed has no triangles'
            )
        ]
    measured = clustering_report(ctx.graph).average
    prediction = predict_clustering(t)
    return [
        compare('clustering', 'average_clustering_range',
                'average clustering lies in (0, 1)', '(0, 1)', measured,
                hard=True, agrees=(0 < measured < 1)),
        compare('clustering', 'average_clustering_prediction',
                'closed-form average clustering', prediction.average,
                measured,
                note=(
                    'empty index ranges: '
                    + ', '.join(prediction.empty_ranges)
                    if prediction.degenerate else ''
                ))
    ]


def _distance_mode(ctx, graph, t):
    if (t <= ctx.bound('exact_distance_max_t')
            and graph.n_vertices <= ctx.bound('exact_distance_max_vertices')):
        return 'exact'
    else:
        return 'sampled'


def check_distances(ctx):
    t = ctx.t
    mode = _distance_mode(ctx, ctx.graph, t)
    report = distance_report(
        ctx.graph, mode=mode,
        n_sources=ctx.bound('distance_sample_sources'),
        max_vertices=ctx.bounds.get('exact_distance_max_vertices')
    )
    items = [
        compare('distances', 'diameter_bound', 'diameter D(t) = 2t + 2',
                2 * t + 2, report.diameter,
                hard=(t <= 1 and mode == 'exact'),
                note=('sampled lower bound' if mode == 'sampled' else ''))
    ]
    if t == 2:
        items.append(
            compare('distances', 'diameter_proof_text',
                    'value quoted in the diameter argument', 4,
                    report.diameter)
        )
    if t >= 1 and mode == 'exact':
        previous, _ = generate_n(t - 1, config=ctx.config)
        d_previous = distance_report(previous, mode='exact').diameter
        increment = report.diameter - d_previous
        linear = increment in LINEAR_DIAMETER_INCREMENTS
        items.extend([
            compare('distances', 'diameter_increment',
                    'linear growth D(t) - D(t-1) in {1, 2}',
                    list(LINEAR_DIAMETER_INCREMENTS), increment,
                    agrees=linear,
                    note=('' if linear else (
                        f'D({t - 1})={d_previous} to D({t})={report.diameter}'
                        f' jumps by {increment}'
                    ))),
            compare('distances', 'diameter_increment_observed',
                    'D(t) - D(t-1) in {1, 2, 4} under calibrated rules',
                    list(DIAMETER_INCREMENTS), increment, hard=True,
                    agrees=(increment in DIAMETER_INCREMENTS))
        ])
    if t >= 1:
        items.append(
            compare('distances', 'apl_per_t', 'small-world trend APL/t',
                    None, float(report.apl) / t, note=f'{mode} APL')
        )
    return items


def check_spanning(ctx):
    t = ctx.t
    ctx.check('spanning_max_t', t)
    measured = count_spanning_trees(
        ctx.graph, max_vertices=ctx.bounds.get('determinant_max_vertices')
    )
    prediction = predict_spanning(
        t, bit_bound=ctx.bounds.get('log2_bit_bound')
    )
    items = [
        compare('spanning', 'spanning_tree_count',
                'factorised spanning-tree count', prediction.spanning,
                measured.value, note=', '.join(prediction.flags))
    ]
    if t <= 1:
        items.append(
            compare('spanning', 'rectangle_unit_count',
                    'per-rectangle unit count Q(t)', prediction.q,
                    measured.value)
        )
    return items


def check_mlst(ctx):
    t = ctx.t
    graph = ctx.graph
    ctx.check('mlst_max_t', t)
    result = max_leaf_spanning_tree(
        graph, budget=ctx.bounds.get('mlst_budget')
    )
    prediction = predict_spanning(
        t, bit_bound=ctx.bounds.get('log2_bit_bound')
    )
    notes = list()
    if predict_max_leaves(t) is None:
        notes.append('closed form defined for t >= 3')
    if not result.exhaustive:
        notes.append(f'search budget exhausted, gap {result.bound_gap}')
    items = [
        compare('mlst', 'max_leaves', 'maximum leaf count Psi(t)',
                predict_max_leaves(t), result.max_leaves,
                note='; '.join(notes))
    ]
    if graph.n_edges <= ctx.bound('mls_count_max_edges'):
        items.append(
            compare('mlst', 'mls_count', 'maximum-leaf tree count',
                    prediction.mls_count,
                    count_mls_trees(
                        graph, cap=ctx.bounds.get('enumerate_cap')
                    ).value)
        )
    else:
        items.append(
            not_applicable(
                'mlst', 'mls_count', f'too many edges: {graph.n_edges}'
            )
        )
    return items


CHECKERS = {
    'counts': check_counts, 'degrees': check_degrees, 'zipf': check_zipf,
    'clustering': check_clustering, 'distances': check_distances,
    'spanning': check_spanning, 'mlst': check_mlst
}


def validate_groups(groups=None):
    if not groups:
        return list(CHECK_GROUPS)
    for g in groups:
        if g not in CHECKERS:
            raise ValueError(f'invalid check group: {g}')
    return [g for g in CHECK_GROUPS if g in groups]


def run_check_group(group, ctx):
    logger = logging.getLogger(__name__)
    logger.info(f'Run a check group:\t{group}')
    try:
        items = CHECKERS[group](ctx)
    except ResourceBoundError as e:
        logger.warning(f'check group skipped:\t{group}:\t{e}')
        items = [not_applicable(group, group, str(e))]
    for i in items:
        logger.debug(f'report item:\t{i}')
    return items


def verify_model(t, config=None, groups=None, lam=1.0, bounds=None):
    config = config or RuleConfig()
    groups = validate_groups(groups)
    graph, trace = generate_n(
        t, config=config, max_t=(bounds or dict()).get('generate_n_max_t')
    )
    ctx = CheckContext(
        t=t, graph=graph, trace=trace, config=config, lam=lam,
        bounds=dict(bounds or dict())
    )
    return DiscrepancyReport(
        model='n', t=t, config_fingerprint=config.fingerprint, groups=groups,
        items=[i for g in groups for i in run_check_group(g, ctx)]
    )
