#!/usr/bin/env python

from pathlib import Path

import luigi

from ..graph.fileio import graph_to_dict
from ..graph.generator import generate_n
from .core import HybridnetTask


class GenerateNetwork(HybridnetTask):
    t = luigi.IntParameter()
    rule_config = luigi.DictParameter()
    work_dir_path = luigi.Parameter(default='.')
    bounds = luigi.DictParameter(default=dict())
    priority = 100

    def output(self):
        return luigi.LocalTarget(
            Path(self.work_dir_path).resolve().joinpath(
                self.network_stem(self.t, self.rule_config) + '.graph.json'
            )
        )

    def run(self):
        config = self.rule_config_from_param(self.rule_config)
        self.print_log(
            f'Generate a network:\tN({self.t}) {config.fingerprint}'
        )
        graph, trace = generate_n(
            self.t, config=config, max_t=self.bounds.get('generate_n_max_t')
        )
        self.write_json({
            'config': config.to_dict(),
            'graph': graph_to_dict(graph, config.fingerprint),
            'trace': trace.to_dict()
        })


if __name__ == '__main__':
    luigi.run()
