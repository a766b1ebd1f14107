#!/usr/bin/env python

import logging
import os
from pathlib import Path
from pprint import pformat

from psutil import cpu_count

from ..graph.generator import RuleConfig
from ..graph.verify import DiscrepancyReport, validate_groups
from ..task.controller import VerifyModel
from .util import (build_luigi_tasks, print_log, print_yml,
                   render_luigi_log_cfg)


def run_verification(t, config=None, groups=None, lam=1.0,
                     report_path=None, work_dir_path='.', max_n_worker=None,
                     bounds=None, console_log_level='WARNING',
                     file_log_level='DEBUG'):
    logger = logging.getLogger(__name__)
    config = config or RuleConfig()
    groups = validate_groups(groups)
    work_dir = Path(work_dir_path).resolve()
    log_dir = work_dir.joinpath('log')
    n_worker = min(len(groups), cpu_count(), int(max_n_worker or len(groups)))
    logger.debug(f'groups:\t{groups}, n_worker:\t{n_worker}')
    task_kwargs = {
        't': t, 'rule_config': config.to_dict(), 'groups': groups,
        'lam': lam, 'work_dir_path': str(work_dir),
        'report_path': (
            str(Path(report_path).resolve()) if report_path else ''
        ),
        'bounds': dict(bounds or dict())
    }
    logger.debug('task_kwargs:' + os.linesep + pformat(task_kwargs))
    print_log(f'Verify the model:\tN({t})')
    print_yml([
        {'config': config.to_dict()},
        {'fingerprint': config.fingerprint}, {'groups': groups},
        {'n_worker': n_worker}
    ])
    log_cfg_path = str(log_dir.joinpath('luigi.log.cfg'))
    render_luigi_log_cfg(
        log_cfg_path=log_cfg_path, console_log_level=console_log_level,
        file_log_level=file_log_level
    )
    task = VerifyModel(**task_kwargs)
    build_luigi_tasks(
        tasks=[task], workers=n_worker, log_level=console_log_level,
        logging_conf_file=log_cfg_path
    )
    with task.output().open('r') as f:
        return DiscrepancyReport.from_json(f.read())
