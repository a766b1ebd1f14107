#!/usr/bin/env python

import json
import logging
import re
from pathlib import Path

import pydot

from .core import ORIENTATIONS, ORIGINS, LabeledGraph
from .errors import FileFormatError, GrowthError

GRAPH_FORMATS = ('edgelist', 'dot', 'json')
GRAPH_SCHEMA_VERSION = 1
ORIGIN_ROLES = {
    'triangle': {'triangle-member'}, 'hub': {'triangle-member'},
    'rectangle': {'rectangle-side'}, 'star': {'pendant'}
}


def _edgelist_lines(graph, config_fingerprint):
    yield (
        f'# model={graph.model} t={graph.t}'
        + f' config={config_fingerprint or "none"}'
    )
    yield f'# vertices={graph.n_vertices} edges={graph.n_edges}'
    for e in graph.edges:
        u, v = e.endpoints
        yield f'{u} {v} {e.orientation} {e.birth_step} {e.origin}'


def to_pydot(graph, config_fingerprint=None):
    dot = pydot.Dot(
        f'{graph.model}_t{graph.t}', graph_type='graph',
        comment=f'config={config_fingerprint or "none"}'
    )
    for v in graph.vertices:
        dot.add_node(
            pydot.Node(str(v.id), birth=str(v.birth_step), origin=v.origin)
        )
    for e in graph.edges:
        dot.add_edge(
            pydot.Edge(
                *[str(x) for x in e.endpoints], orientation=e.orientation,
                birth=str(e.birth_step), origin=e.origin
            )
        )
    return dot


def graph_to_dict(graph, config_fingerprint=None):
    return {
        'schema_version': GRAPH_SCHEMA_VERSION, 'model': graph.model,
        't': graph.t, 'config': config_fingerprint,
        'vertices': [[v.id, v.birth_step, v.origin] for v in graph.vertices],
        'edges': [
            [*e.endpoints, e.orientation, e.birth_step, e.origin,
             sorted(e.roles)]
            for e in graph.edges
        ],
        'rectangles': [
            {
                'corners': list(r.corners), 'verticals': list(r.verticals),
                'aclinics': list(r.aclinics), 'birth_step': r.birth_step
            } for r in graph.rectangles
        ]
    }


def graph_from_dict(d):
    try:
        graph = LabeledGraph(model=d['model'], t=d['t'])
        for i, (vid, birth, origin) in enumerate(d['vertices']):
            if vid != i:
                raise FileFormatError(f'vertex ids are not contiguous: {vid}')
            graph.add_vertex(birth_step=birth, origin=origin)
        for u, v, orientation, birth, origin, roles in d['edges']:
            graph.add_edge(
                u, v, orientation=orientation, birth_step=birth,
                origin=origin, roles=roles
            )
        for r in d['rectangles']:
            graph.add_rectangle(**r)
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, FileFormatError):
            raise
        raise FileFormatError(f'malformed graph JSON: {e}')
    return graph.freeze()


def export_graph(graph, fmt='edgelist', config_fingerprint=None):
    if fmt == 'edgelist':
        text = '\n'.join(_edgelist_lines(graph, config_fingerprint)) + '\n'
    elif fmt == 'dot':
        text = to_pydot(graph, config_fingerprint).to_string()
    elif fmt == 'json':
        text = json.dumps(
            graph_to_dict(graph, config_fingerprint), sort_keys=True,
            indent=2
        ) + '\n'
    else:
        raise ValueError(f'invalid format: {fmt}')
    return text.encode('utf-8')


def _parse_header(line):
    return dict(re.findall(r'(\w+)=(\S+)', line))


def _parse_edgelist(text):
    header = dict()
    body = list()
    for n, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s:
            continue
        elif s.startswith('#'):
            header.update(_parse_header(s))
            continue
        fields = s.split()
        if len(fields) != 5:
            raise FileFormatError(f'expected 5 fields: {s}', line_number=n)
        try:
            u, v, birth = int(fields[0]), int(fields[1]), int(fields[3])
        except ValueError:
            raise FileFormatError(f'non-integer field: {s}', line_number=n)
        orientation, origin = fields[2], fields[4]
        if not u < v or u < 0:
            raise FileFormatError(f'expected 0 <= u < v: {s}', line_number=n)
        elif orientation not in ORIENTATIONS:
            raise FileFormatError(
                f'invalid orientation: {orientation}', line_number=n
            )
        elif origin not in ORIGINS or birth < 0:
            raise FileFormatError(
                f'invalid origin or birth: {s}', line_number=n
            )
        body.append((n, u, v, orientation, birth, origin))
    return header, body


def import_edgelist(text):
    header, body = _parse_edgelist(text)
    first_seen = dict()
    for _, u, v, _, birth, origin in body:
        for x in (u, v):
            first_seen.setdefault(x, (birth, origin))
    if sorted(first_seen) != list(range(len(first_seen))):
        raise FileFormatError('vertex ids are not contiguous')
    for k, n in [('vertices', len(first_seen)), ('edges', len(body))]:
        if k in header and int(header[k]) != n:
            raise FileFormatError(
                f'header says {k}={header[k]} but body has {n}'
            )
    graph = LabeledGraph(
        model=header.get('model', 'n'), t=int(header.get('t', 0))
    )
    try:
        for x in range(len(first_seen)):
            graph.add_vertex(*first_seen[x])
    except GrowthError as e:
        raise FileFormatError(str(e))
    for n, u, v, orientation, birth, origin in body:
        try:
            graph.add_edge(
                u, v, orientation=orientation, birth_step=birth,
                origin=origin, roles=ORIGIN_ROLES.get(origin, set())
            )
        except GrowthError as e:
            raise FileFormatError(str(e), line_number=n)
    return graph.freeze(), header.get('config')


def import_graph(data, fmt='edgelist'):
    text = (data.decode('utf-8') if isinstance(data, bytes) else data)
    if fmt == 'edgelist':
        graph, _ = import_edgelist(text)
        return graph
    elif fmt == 'json':
        try:
            d = json.loads(text)
        except json.JSONDecodeError as e:
            raise FileFormatError(
                f'invalid JSON: {e.msg}', line_number=e.lineno
            )
        return graph_from_dict(d)
    else:
        raise ValueError(f'unsupported import format: {fmt}')


def guess_format(path):
    suffix = Path(path).suffix.lower()
    return {'.json': 'json', '.dot': 'dot', '.gv': 'dot'}.get(
        suffix, 'edgelist'
    )


def write_graph(graph, path, fmt=None, config_fingerprint=None):
    logger = logging.getLogger(__name__)
    fmt = fmt or guess_format(path)
    p = Path(path).resolve()
    logger.info(f'Write a {fmt} file:\t{p}')
    p.write_bytes(
        export_graph(graph, fmt=fmt, config_fingerprint=config_fingerprint)
    )
    return p


def read_graph(path, fmt=None):
    return import_graph(
        Path(path).read_bytes(), fmt=(fmt or guess_format(path))
    )
