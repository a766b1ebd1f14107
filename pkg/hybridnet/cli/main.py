#!/usr/bin/env python
"""
Hybrid-Growth Network Workbench

Usage:
    hybridnet init [--debug|--info] [--yml=<path>]
    hybridnet gen [--debug|--info] [--model=<name>] --t=<int>
        [--config=<path>] [--format=<fmt>] [--out=<path>]
    hybridnet tables [--debug|--info] --model=<name> --t=<int>
    hybridnet analyze [--debug|--info] --in=<path>
        [--exact-apl|--sample=<int>] [--lambda=<float>]
    hybridnet predict [--debug|--info] --t=<int> [--theta=<conv>]
    hybridnet recurrence --p=<num> --q=<num> --r=<num> --s=<num>
        [--debug|--info] --a1=<num> --n=<int>
    hybridnet spanning [--debug|--info] --in=<path> [--enumerate-cap=<int>]
    hybridnet mlst [--debug|--info] --in=<path> [--budget=<int>]
    hybridnet verify [--debug|--info] --t=<int> [--config=<path>]
        [--groups=<list>] [--lambda=<float>] [--in-process]
        [--workers=<int>] [--work-dir=<path>] [--out=<path>]
    hybridnet calibrate [--debug|--info] [--anchors=<path>]
    hybridnet -h|--help
    hybridnet --version

Commands:
    init                    Create a rule config YAML template
    gen                     Generate N(t) or N1(t) and export it
    tables                  Print an appendix degree table and its slopes
    analyze                 Measure degrees, clustering, distances, and Zipf
    predict                 Evaluate the closed forms for t
    recurrence              Solve a Moebius recurrence in closed form
    spanning                Count spanning trees of a graph file
    mlst                    Find a maximum-leaf spanning tree of a graph file
    verify                  Compare measurements with predictions
    calibrate               List rule configs matching hand-count anchors

Options:
    -h, --help              Print help and exit
    --version               Print version and exit
    --debug, --info         Execute a command with debug|info messages
    --yml=<path>            Specify a config YAML path [default: rules.yml]
    --model=<name>          Select a model {n, n1, apollonian, sierpinski}
    --t=<int>               Specify a growth step
    --config=<path>         Specify a rule config YAML path
    --format=<fmt>          Select an export format {edgelist, dot, json}
    --out=<path>            Specify an output path
    --in=<path>             Specify an input graph path
    --exact-apl             Compute exact average path length
    --sample=<int>          Sample the given number of BFS sources
    --lambda=<float>        Specify the Zipf exponent
    --theta=<conv>          Select a growth table convention
                            {general, row-literal} [default: general]
    --p=<num>               Specify the recurrence coefficient p
    --q=<num>               Specify the recurrence coefficient q
    --r=<num>               Specify the recurrence coefficient r
    --s=<num>               Specify the recurrence coefficient s
    --a1=<num>              Specify the initial term
    --n=<int>               Specify the term index
    --enumerate-cap=<int>   Enumerate trees up to the given count
    --budget=<int>          Limit branch-and-bound nodes
    --groups=<list>         Specify comma-separated check groups
    --in-process            Run check groups without luigi
    --workers=<int>         Specify the maximum number of workers
    --work-dir=<path>       Specify a working directory [default: .]
    --anchors=<path>        Specify an anchor YAML path
"""

import json
import logging
import os
import sys
from fractions import Fraction
from pathlib import Path

import yaml
from docopt import DocoptExit, docopt

from .. import __version__
from ..graph.closedform import (MobiusRecurrence, iterate_moebius,
                                predict_average_degree, predict_clustering,
                                predict_counts, predict_degree_table,
                                predict_spanning, solve_moebius)
from ..graph.errors import ConfigError, DegenerateInputError, HybridnetError
from ..graph.fileio import export_graph, read_graph, write_graph
from ..graph.generator import (RuleConfig, appendix_degree_table,
                               calibrate_rules, generate_n, generate_n1,
                               parse_anchors)
from ..graph.metrics import (clustering_report, degree_report,
                             distance_report, powerlaw_fit, zipf_report)
from ..graph.spanning import (count_spanning_trees, enumerate_spanning_trees,
                              max_leaf_spanning_tree)
from ..graph.verify import encode_value, verify_model
from .pipeline import run_verification
from .util import (load_default_dict, print_log, print_yml, read_yml,
                   write_config_yml)


def main(argv=None):
    try:
        args = docopt(__doc__, argv=argv, version=__version__)
    except DocoptExit as e:
        print(e, file=sys.stderr)
        return 2
    if args['--debug']:
        log_level = 'DEBUG'
    elif args['--info']:
        log_level = 'INFO'
    else:
        log_level = 'WARNING'
    logging.basicConfig(
        format='%(asctime)s %(levelname)-8s %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S', level=log_level
    )
    logger = logging.getLogger(__name__)
    logger.debug(f'args:{os.linesep}{args}')
    logger.info(f'Start hybridnet {__version__}')
    try:
        return _run_command(args=args, log_level=log_level)
    except (HybridnetError, yaml.YAMLError) as e:
        logger.error(e)
        print(f'error:\t{e}', file=sys.stderr)
        return (1 if args['verify'] else 2)


def _run_command(args, log_level):
    if args['init']:
        write_config_yml(path=args['--yml'])
    elif args['gen']:
        _generate(args)
    elif args['tables']:
        _print_appendix_table(model=args['--model'], t=_to_int(args, '--t'))
    elif args['analyze']:
        _print_json(
            _analyze(
                graph=read_graph(args['--in']),
                exact_apl=args['--exact-apl'],
                n_sources=_to_int(args, '--sample'),
                lam=_zipf_lambda(args)
            )
        )
    elif args['predict']:
        _print_json(
            _predict(t=_to_int(args, '--t'), theta_convention=args['--theta'])
        )
    elif args['recurrence']:
        _print_json(_solve_recurrence(args))
    elif args['spanning']:
        _print_json(
            _count_trees(
                graph=read_graph(args['--in']),
                cap=_to_int(args, '--enumerate-cap')
            )
        )
    elif args['mlst']:
        graph = read_graph(args['--in'])
        r = max_leaf_spanning_tree(graph, budget=_to_int(args, '--budget'))
        _print_json({
            'max_leaves': r.max_leaves,
            'witness': [list(graph.edges[i].endpoints) for i in r.witness],
            'exhaustive': r.exhaustive, 'upper_bound': r.upper_bound,
            'n_nodes': r.n_nodes
        })
    elif args['verify']:
        return _verify(args, log_level=log_level)
    elif args['calibrate']:
        _calibrate(anchors_path=args['--anchors'])
    return 0


def _to_int(args, key):
    if args[key] is None:
        return None
    try:
        return int(args[key])
    except ValueError:
        raise ConfigError(f'{key} must be an integer: {args[key]}')


def _zipf_lambda(args):
    if args['--lambda'] is None:
        return load_default_dict(stem='defaults')['verify']['zipf_lambda']
    try:
        return float(args['--lambda'])
    except ValueError:
        raise ConfigError(f'--lambda must be a number: {args["--lambda"]}')


def _print_json(data):
    print(json.dumps(encode_value(data), sort_keys=True, indent=2))


def load_rule_config(path=None):
    if not path:
        return RuleConfig()
    d = read_yml(path=Path(path).resolve())
    if not isinstance(d, dict):
        raise ConfigError(f'config YAML must be a mapping: {path}')
    return RuleConfig.from_dict(d)


def _generate(args):
    model = args['--model'] or 'n'
    t = _to_int(args, '--t')
    fmt = args['--format']
    if model == 'n':
        config = load_rule_config(args['--config'])
        graph, _ = generate_n(t, config=config)
        fingerprint = config.fingerprint
    elif model == 'n1':
        graph = generate_n1(t)
        fingerprint = None
    else:
        raise ConfigError(f'invalid model for gen: {model}')
    if args['--out']:
        write_graph(
            graph, args['--out'], fmt=fmt, config_fingerprint=fingerprint
        )
    else:
        sys.stdout.write(
            export_graph(
                graph, fmt=(fmt or 'edgelist'), config_fingerprint=fingerprint
            ).decode('utf-8')
        )


def _print_appendix_table(model, t):
    try:
        rows = appendix_degree_table(model, t)
    except ValueError as e:
        raise ConfigError(str(e))
    data = {
        'model': model, 't': t,
        'rows': [
            {'rank': r.rank, 'degree': r.degree, 'count': r.count}
            for r in rows
        ]
    }
    try:
        data['powerlaw_slope'] = powerlaw_fit(rows).slope
        data['zipf_slope_vs_cumulative'] = (
            zipf_report(rows).slope_vs_cumulative().slope
        )
    except DegenerateInputError as e:
        logging.getLogger(__name__).warning(e)
    print_yml(data)


def _analyze(graph, exact_apl=False, n_sources=None, lam=1.0):
    degrees = degree_report(graph)
    if exact_apl or n_sources is None:
        distances = distance_report(graph, mode='exact')
    else:
        distances = distance_report(
            graph, mode='sampled', n_sources=n_sources
        )
    zipf = zipf_report(graph, lam=lam)
    return {
        'model': graph.model, 't': graph.t,
        'n_vertices': graph.n_vertices, 'n_edges': graph.n_edges,
        'degree_histogram': degrees.histogram,
        'average_degree': degrees.average_degree,
        'average_clustering': clustering_report(graph).average,
        'diameter': distances.diameter, 'apl': distances.apl,
        'distance_method': distances.method,
        'zipf_ratio': zipf.ratio, 'zipf_ratio_spread': zipf.spread
    }


def _predict(t, theta_convention='general'):
    counts = predict_counts(t)
    spanning = predict_spanning(t, theta_convention=theta_convention)
    data = {
        't': t, 'n_vertices': counts.n_vertices, 'n_edges': counts.n_edges,
        'source': counts.source, 'pendant': counts.pendant,
        'delta': counts.delta(theta_convention),
        'theta': counts.theta(theta_convention),
        'average_degree': predict_average_degree(t),
        'spanning': {
            's1': spanning.s1, 'q': spanning.q,
            'spanning_trees': spanning.spanning,
            'max_leaves': spanning.max_leaves,
            'mls_count': spanning.mls_count, 'flags': list(spanning.flags)
        }
    }
    if t >= 1:
        clustering = predict_clustering(t)
        data['average_clustering'] = clustering.average
        data['clustering_empty_ranges'] = list(clustering.empty_ranges)
    if t >= 3:
        table = predict_degree_table(t)
        data['degree_table'] = {
            'rows': [[r.degree, r.count] for r in table.rows],
            'degree_mass': table.degree_mass,
            'vertex_sum': table.vertex_sum,
            'mass_consistent': table.mass_consistent
        }
    return data


def _solve_recurrence(args):
    try:
        coefficients = {
            k: Fraction(args[f'--{k}']) for k in ['p', 'q', 'r', 's', 'a1']
        }
    except ValueError as e:
        raise ConfigError(f'invalid coefficient: {e}')
    n = _to_int(args, '--n')
    rec = MobiusRecurrence(**coefficients)
    closed_form = solve_moebius(rec, n)
    return {
        'n': n,
        'closed_form': (
            str(closed_form) if isinstance(closed_form, complex)
            else closed_form
        ),
        'iterated': iterate_moebius(rec, n)
    }


def _count_trees(graph, cap=None):
    data = {'spanning_trees': count_spanning_trees(graph).value}
    if cap is not None:
        r = enumerate_spanning_trees(graph, cap=cap)
        data['enumeration'] = {
            'count': (r.count.value if r.count else None),
            'cap_exceeded': r.cap_exceeded, 'method': r.method,
            'leaf_histogram': r.leaf_histogram
        }
    return data


def _verify(args, log_level):
    t = _to_int(args, '--t')
    config = load_rule_config(args['--config'])
    groups = (
        [g.strip() for g in args['--groups'].split(',') if g.strip()]
        if args['--groups']
        else load_default_dict(stem='defaults')['verify']['groups']
    )
    lam = _zipf_lambda(args)
    try:
        if args['--in-process']:
            report = verify_model(t, config=config, groups=groups, lam=lam)
        else:
            report = run_verification(
                t=t, config=config, groups=groups, lam=lam,
                report_path=args['--out'], work_dir_path=args['--work-dir'],
                max_n_worker=_to_int(args, '--workers'),
                console_log_level=log_level
            )
    except ValueError as e:
        raise ConfigError(str(e))
    if args['--out']:
        if args['--in-process']:
            p = Path(args['--out']).resolve()
            print_log(f'Write a report:\t{p}')
            p.write_text(report.to_json())
        print_yml({
            'summary': report.summary(),
            'hard_failures': [i.name for i in report.hard_failures]
        })
    else:
        print(report.to_json(), end='')
    return (1 if report.hard_failures else 0)


def _calibrate(anchors_path=None):
    anchors = parse_anchors(
        read_yml(path=Path(anchors_path).resolve()) if anchors_path
        else load_default_dict(stem='anchors')
    )
    print_log(f'Calibrate rule configs:\t{len(anchors)} anchors')
    matches = calibrate_rules(anchors)
    print_yml({
        'n_matches': len(matches),
        'matches': [
            {'fingerprint': c.fingerprint, **c.to_dict()} for c in matches
        ]
    })
