#!/usr/bin/env python

import json
import logging
from pathlib import Path

import luigi

from ..cli.util import print_log
from ..graph.generator import RuleConfig


class HybridnetTask(luigi.Task):
    @staticmethod
    def print_log(message):
        print_log(message)

    @staticmethod
    def read_json(path):
        with open(path, 'r') as f:
            return json.load(f)

    def write_json(self, data, target=None):
        logger = logging.getLogger(__name__)
        target = target or self.output()
        Path(target.path).parent.mkdir(parents=True, exist_ok=True)
        logger.debug(f'Write a JSON file:\t{target.path}')
        with target.open('w') as f:
            f.write(json.dumps(data, sort_keys=True, indent=2) + '\n')

    @staticmethod
    def rule_config_from_param(param):
        return RuleConfig.from_dict({
            k: (list(v) if isinstance(v, (list, tuple)) else v)
            for k, v in dict(param).items()
        })

    @classmethod
    def network_stem(cls, t, rule_config):
        fingerprint = cls.rule_config_from_param(rule_config).fingerprint
        return f'n_t{t}.{fingerprint}'
