#!/usr/bin/env python

from pathlib import Path

import luigi
from luigi.util import requires

from ..graph.fileio import graph_from_dict
from ..graph.generator import GrowthTrace, RuleConfig
from ..graph.verify import CheckContext, run_check_group
from .core import HybridnetTask
from .generate import GenerateNetwork


def load_check_context(network_json, lam=1.0, bounds=None):
    return CheckContext(
        t=network_json['graph']['t'],
        graph=graph_from_dict(network_json['graph']),
        trace=GrowthTrace.from_dict(network_json['trace']),
        config=RuleConfig.from_dict(network_json['config']), lam=lam,
        bounds=dict(bounds or dict())
    )


@requires(GenerateNetwork)
class RunCheckGroup(HybridnetTask):
    group = luigi.Parameter()
    lam = luigi.FloatParameter(default=1.0)
    priority = 50

    def output(self):
        network_json = Path(self.input().path)
        return luigi.LocalTarget(
            network_json.parent.joinpath(
                network_json.name.replace(
                    '.graph.json', f'.{self.group}.items.json'
                )
            )
        )

    def run(self):
        self.print_log(f'Run a check group:\t{self.group}')
        ctx = load_check_context(
            self.read_json(self.input().path), lam=self.lam,
            bounds=dict(self.bounds)
        )
        self.write_json(
            [i.to_dict() for i in run_check_group(self.group, ctx)]
        )


if __name__ == '__main__':
    luigi.run()
