#!/usr/bin/env python

from functools import lru_cache

from ..cli.util import load_default_dict
from .errors import ResourceBoundError


@lru_cache(maxsize=None)
def _default_bounds():
    return dict(load_default_dict(stem='defaults')['resource_bounds'])


def resource_bound(name, override=None):
    if override is not None:
        return override
    else:
        return _default_bounds()[name]


def check_bound(name, value, override=None):
    bound = resource_bound(name, override=override)
    if value > bound:
        raise ResourceBoundError(f'{name} exceeded: {value} > {bound}')
    return bound
