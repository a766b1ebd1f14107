#!/usr/bin/env python

import logging
import os
from pathlib import Path

import luigi
from luigi.tools import deps_tree

from ..graph.verify import DiscrepancyReport, ReportItem, validate_groups
from .check import RunCheckGroup
from .core import HybridnetTask


class VerifyModel(HybridnetTask):
    t = luigi.IntParameter()
    rule_config = luigi.DictParameter()
    groups = luigi.ListParameter(default=list())
    lam = luigi.FloatParameter(default=1.0)
    work_dir_path = luigi.Parameter(default='.')
    report_path = luigi.Parameter(default='')
    bounds = luigi.DictParameter(default=dict())
    priority = 10

    def requires(self):
        return [
            RunCheckGroup(
                t=self.t, rule_config=self.rule_config, group=g,
                lam=self.lam, work_dir_path=self.work_dir_path,
                bounds=self.bounds
            ) for g in validate_groups(self.groups)
        ]

    def output(self):
        return luigi.LocalTarget(
            Path(self.report_path).resolve() if self.report_path
            else Path(self.work_dir_path).resolve().joinpath(
                self.network_stem(self.t, self.rule_config) + '.report.json'
            )
        )

    def run(self):
        logger = logging.getLogger(__name__)
        logger.debug('Task tree:' + os.linesep + deps_tree.print_tree(self))
        config = self.rule_config_from_param(self.rule_config)
        self.print_log(
            f'Merge check groups:\tN({self.t}) {config.fingerprint}'
        )
        report = DiscrepancyReport(
            model='n', t=self.t, config_fingerprint=config.fingerprint,
            groups=validate_groups(self.groups),
            items=[
                ReportItem.from_dict(d) for i in self.input()
                for d in self.read_json(i.path)
            ]
        )
        Path(self.output().path).parent.mkdir(parents=True, exist_ok=True)
        with self.output().open('w') as f:
            f.write(report.to_json())


if __name__ == '__main__':
    luigi.run()
