#!/usr/bin/env python

import logging
import os
import shutil
from pathlib import Path

import luigi
import yaml
from jinja2 import Environment, FileSystemLoader


def print_log(message):
    logger = logging.getLogger(__name__)
    logger.debug(message)
    print(f'>>\t{message}', flush=True)


def read_yml(path):
    with open(path, 'r') as f:
        d = yaml.load(f, Loader=yaml.SafeLoader)
    return d


def print_yml(data):
    logger = logging.getLogger(__name__)
    logger.debug(data)
    print(yaml.dump(data, default_flow_style=False, sort_keys=False), end='')


def write_config_yml(path, src_yml='default_rules.yml'):
    if Path(path).is_file():
        print_log(f'The file exists:\t{path}')
    else:
        print_log(f'Create a config YAML:\t{path}')
        shutil.copyfile(
            str(Path(__file__).parent.joinpath('../static').joinpath(src_yml)),
            Path(path).resolve()
        )


def render_template(template, data, output_path):
    po = (Path(output_path) if isinstance(output_path, str) else output_path)
    print_log(('Overwrite' if po.exists() else 'Render') + f' a file:\t{po}')
    with po.open(mode='w') as f:
        f.write(
            Environment(
                loader=FileSystemLoader(
                    str(Path(__file__).parent.joinpath('../template')),
                    encoding='utf8'
                )
            ).get_template(template).render(data) + os.linesep
        )


def render_luigi_log_cfg(log_cfg_path, console_log_level='WARNING',
                         file_log_level='DEBUG'):
    log_cfg = Path(log_cfg_path).resolve()
    log_cfg.parent.mkdir(parents=True, exist_ok=True)
    render_template(
        template='luigi.log.cfg.j2',
        data={
            'console_log_level': console_log_level,
            'file_log_level': file_log_level,
            'file_log_path': str(log_cfg.parent.joinpath('luigi.log'))
        },
        output_path=log_cfg
    )


def build_luigi_tasks(check_scheduling_succeeded=True, hide_summary=False,
                      **kwargs):
    r = luigi.build(
        local_scheduler=True, detailed_summary=True,
        **{k: v for k, v in kwargs.items() if v is not None}
    )
    if not hide_summary:
        print(
            os.linesep + os.linesep.join(
                ['Execution summary:', r.summary_text, str(r.status)]
            )
        )
    if check_scheduling_succeeded and not r.scheduling_succeeded:
        raise RuntimeError('Scheduling failed')
    return r


def load_default_dict(stem):
    return read_yml(
        path=Path(__file__).parent.parent.joinpath(f'static/{stem}.yml')
    )
