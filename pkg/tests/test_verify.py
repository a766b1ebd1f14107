#!/usr/bin/env python

import json
from fractions import Fraction

import pytest

from hybridnet.cli.pipeline import run_verification
from hybridnet.graph.closedform import PowerProduct
from hybridnet.graph.verify import (CHECK_GROUPS, DiscrepancyReport,
                                    decode_value, encode_value, verify_model)


def _item(report, name):
    return next(i for i in report.items if i.name == name)


@pytest.fixture(scope='module')
def report_at_three():
    return verify_model(3)


def test_hard_anchors_hold(report_at_three):
    assert report_at_three.hard_failures == list()
    assert report_at_three.groups == list(CHECK_GROUPS)
    assert all(i.provenance for i in report_at_three.items)


def test_vertex_count_item(report_at_three):
    item = _item(report_at_three, 'n_vertices')
    assert (item.predicted, item.measured, item.status) == (78, 78, 'match')
    assert item.hard
    assert item.residual == 0


def test_degree_table_items(report_at_three):
    vertex_sum = _item(report_at_three, 'degree_table_vertex_sum')
    assert (vertex_sum.predicted, vertex_sum.measured) == (82, 78)
    assert vertex_sum.status == 'report-only'
    assert vertex_sum.agrees is False
    mass = _item(report_at_three, 'degree_table_mass')
    assert (mass.predicted, mass.status) == (248, 'match')


def test_growth_table_items(report_at_three):
    assert _item(report_at_three, 'pendant_count').status == 'match'
    assert _item(report_at_three, 'theta_general').status == 'match'
    assert _item(report_at_three, 'theta_row_literal').status == 'report-only'
    alpha = _item(report_at_three, 'alpha_tracked_vertex')
    assert (alpha.predicted, alpha.measured) == (2, 2)
    assert alpha.agrees


def test_groups_over_bounds_are_not_applicable(report_at_three):
    item = _item(report_at_three, 'mlst')
    assert item.status == 'not-applicable'
    assert 'mlst_max_t' in item.note
    assert _item(report_at_three, 'spanning_tree_count').measured > 0


def test_seed_diameter():
    report = verify_model(0, groups=['distances'])
    item = _item(report, 'diameter_bound')
    assert (item.predicted, item.measured, item.status) == (2, 2, 'match')


def test_diameter_increment_within_linear_growth(report_at_three):
    linear = _item(report_at_three, 'diameter_increment')
    assert (linear.predicted, linear.measured) == ([1, 2], 2)
    assert linear.status == 'report-only'
    assert linear.agrees
    observed = _item(report_at_three, 'diameter_increment_observed')
    assert observed.hard
    assert observed.status == 'match'


def test_diameter_jump_is_reported_not_absorbed():
    report = verify_model(4, groups=['distances'])
    linear = _item(report, 'diameter_increment')
    assert (linear.predicted, linear.measured) == ([1, 2], 4)
    assert linear.status == 'report-only'
    assert linear.agrees is False
    assert 'jumps by 4' in linear.note
    observed = _item(report, 'diameter_increment_observed')
    assert (observed.predicted, observed.measured) == ([1, 2, 4], 4)
    assert observed.status == 'match'
    assert report.hard_failures == list()


def test_zipf_ratio_is_not_constant(report_at_three):
    spread = _item(report_at_three, 'zipf_ratio_spread')
    assert spread.status == 'report-only'
    assert spread.measured > 1


def test_first_step_spanning_items():
    report = verify_model(1, groups=['spanning', 'mlst'])
    spanning = _item(report, 'spanning_tree_count')
    assert (spanning.predicted, spanning.measured) == (30, 30)
    assert spanning.agrees
    assert _item(report, 'rectangle_unit_count').predicted == 30
    assert _item(report, 'max_leaves').measured == 6
    assert _item(report, 'mls_count').measured == 16


def test_report_is_deterministic():
    assert verify_model(2).to_json() == verify_model(2).to_json()


def test_report_round_trip(report_at_three):
    text = report_at_three.to_json()
    restored = DiscrepancyReport.from_json(text)
    assert restored.to_json() == text
    assert json.loads(text)['schema_version'] == 1


def test_bound_overrides():
    report = verify_model(
        3, groups=['spanning'], bounds={'spanning_max_t': 2}
    )
    assert [i.status for i in report.items] == ['not-applicable']


def test_group_order_and_validation():
    report = verify_model(0, groups=['zipf', 'counts'])
    assert report.groups == ['counts', 'zipf']
    with pytest.raises(ValueError):
        verify_model(0, groups=['colors'])


def test_value_encoding():
    assert encode_value(2 ** 60) == str(2 ** 60)
    assert encode_value(Fraction(3, 4)) == '3/4'
    assert encode_value(Fraction(4, 2)) == 2
    assert encode_value({1: [Fraction(1, 2)]}) == {'1': ['1/2']}
    p = PowerProduct({2: 3, 5: 1})
    assert encode_value(p)['factors'] == {'2': 3, '5': 1}
    assert decode_value(encode_value(p)) == p
    assert decode_value('3/4') == Fraction(3, 4)
    assert decode_value('report') == 'report'


def test_luigi_workflow_matches_in_process(tmp_path):
    report_path = tmp_path.joinpath('report.json')
    report = run_verification(
        t=1, groups=['counts', 'degrees', 'clustering'],
        report_path=str(report_path), work_dir_path=str(tmp_path),
        max_n_worker=1
    )
    assert report_path.is_file()
    assert tmp_path.joinpath('log', 'luigi.log.cfg').is_file()
    expected = verify_model(1, groups=['counts', 'degrees', 'clustering'])
    assert report.to_json() == expected.to_json()
    assert report_path.read_text() == expected.to_json()
